// Localized equivariant K-theory classes on G/B, presented by their
// restrictions to the torus fixed points e_w (one RatChar per Weyl group
// element, in the canonical W-index order).
#pragma once

#include "kflag/charring.hpp"
#include "kflag/rootsys.hpp"

namespace kflag {

struct KClass {
    const RootSystem* rs = nullptr;
    std::vector<RatChar> values;  // |W| entries

    const RatChar& at(int w) const { return values[w]; }
    RatChar& at(int w) { return values[w]; }
};

KClass zero_class(const RootSystem& rs);
KClass unit_class(const RootSystem& rs);

// ι_w: value Π_{α>0}(1 - e^{wα}) at w, zero elsewhere
KClass point_class(const RootSystem& rs, int w);
// λ_{-1}(T*_{e_w}X) = Π_{α>0}(1 - e^{wα})
CharPoly point_denominator(const RootSystem& rs, int w);

// L_λ: value e^{wλ} at every w
KClass line_bundle_class(const RootSystem& rs, const Weight& lambda);

// λ_y(w) = Π_{α>0}(1 + y e^{wα})
CharPoly lambda_y_at(const RootSystem& rs, int w);
KClass lambda_y_cotangent(const RootSystem& rs);

KClass tensor(const KClass& a, const KClass& b);
KClass scale(const KClass& a, const RatChar& c);
KClass add(const KClass& a, const KClass& b);
KClass sub(const KClass& a, const KClass& b);
bool classes_equal(const KClass& a, const KClass& b);

// χ(X,F) = Σ_w F|_w / λ_{-1}(T*_{e_w}X), a single fused localization sum
RatChar euler_char(const KClass& f);
// ⟨a,b⟩ = χ(X, a ⊗ b)
RatChar pairing(const KClass& a, const KClass& b);

// (w.f)|_u = w(f|_{w⁻¹u})
KClass weyl_left_action(const RootSystem& rs, int w, const KClass& f);

// restriction of a weight action as a char-exponent map
std::function<std::vector<int>(const std::vector<int>&)> weyl_char_map(
    const RootSystem& rs, int w);

}  // namespace kflag
