// Motivic Chern classes of Schubert cells and the theorem-level identity
// computations: character/Whittaker formulas, Casselman-Shalika summation,
// duality routes, and the orthogonality pairing.
#pragma once

#include "kflag/hecke.hpp"

namespace kflag {

struct MismatchError : std::runtime_error {
    explicit MismatchError(const std::string& what) : std::runtime_error(what) {}
};
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

enum class ClassKind { Mc, McOpposite, McPrime, DualMc, Schubert, SchubertOpposite, Point, Line };

// MC_y(X(w)°) = T_{w⁻¹}(ι_id)
KClass mc_class(const RootSystem& rs, int w);
// MC'_y(X(w)°) = T^∨_{w⁻¹}(ι_id)
KClass mc_prime_class(const RootSystem& rs, int w);
// D(MC_y(X(w)°)), computed both as serre_dual(mc) and as bar(T_{w⁻¹})(ι_id);
// the two routes must agree
KClass dual_mc_class(const RootSystem& rs, int w);
// MC_y(Y(w)°) = λ_y(T*X)·(1/λ_y(w_0))·T^∨_{(w_0w)⁻¹}(ι_{w_0})
KClass mc_opposite_class(const RootSystem& rs, int w);
// O_w = ∂_{w⁻¹}(ι_id)
KClass schubert_class(const RootSystem& rs, int w);
// O^w = w_0.O_{w_0 w}
KClass schubert_opposite_class(const RootSystem& rs, int w);

KClass class_of_kind(const RootSystem& rs, ClassKind kind, int w, const Weight& lambda = {});

// all of T_{w⁻¹}(ι_id) / T^∨_{w⁻¹}(ι_id) / ∂_{w⁻¹}(ι_id) indexed by w,
// computed by one generator application per group element
std::vector<KClass> all_cell_classes(const RootSystem& rs, OpKind kind);

// χ(X, L_λ ⊗ O_w) = ∂̃_w(e^λ); asserts both routes agree
CharPoly chi_demazure(const RootSystem& rs, const Weight& lambda, int w);
// χ(X, L_λ ⊗ MC_y(X(w)°)) = T̃^∨_w(e^λ)
CharPoly whittaker_dual(const RootSystem& rs, const Weight& lambda, int w);
// χ(X, L_λ ⊗ MC'_y(X(w)°)) = T̃_w(e^λ)  (the Iwahori-Whittaker function)
CharPoly whittaker(const RootSystem& rs, const Weight& lambda, int w);

struct CsReport {
    CharPoly t_dual_sum;  // Σ_w T̃^∨_w(e^λ)
    CharPoly t_sum;       // Σ_w T̃_w(e^λ)
    bool t_dual_ok;       // equals Σ_w e^{wλ} Π (1+ye^{wα})/(1-e^{wα})
    bool t_ok;            // equals Π(1+ye^α) Σ_w e^{wλ}/Π(1-e^{wα})
};
CsReport casselman_shalika(const RootSystem& rs, const Weight& lambda);

// ⟨MC_y(X(u)°), D(MC_y(Y(v)°))/λ_y(T*X)⟩; expected δ_{u,v}(-y)^{ℓ(v)-dim X}
RatChar pairing_orthogonality(const RootSystem& rs, int u, int v);

struct HeckeProductReport {
    bool coefficient_ok;   // coefficient on T_{uv⁻¹} equals (-y)^{-ℓ(v)}
    bool support_ok;       // residual vanishes outside the strict lower interval
};
// requires ℓ(uv⁻¹) = ℓ(u) + ℓ(v⁻¹)
HeckeProductReport hecke_product_leading(const RootSystem& rs, int u, int v);

}  // namespace kflag
