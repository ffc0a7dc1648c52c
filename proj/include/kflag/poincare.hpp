// Poincaré polynomials of smooth Schubert varieties: Bruhat-interval rank
// sums, the height-product formula, and the general fixed-point-data
// product theorem with its hypothesis (every non-minimal point carries a
// cotangent weight -1).
//
// Univariate objects reuse the CharPoly machinery with a single character
// variable interpreted as q (exponent slot 0), y in the trailing slot.
#pragma once

#include "kflag/charring.hpp"
#include "kflag/rootsys.hpp"

namespace kflag {

struct ConditionStarViolated : std::runtime_error {
    ConditionStarViolated() : std::runtime_error("fixed-point data violates the -1-weight condition") {}
};

struct BBFixedPoint {
    std::string label;
    int cell_dim = 0;             // ℓ(p)
    std::vector<int> weights;     // N(p), multiset of nonzero integers, size = dim
};

struct BBFixedPointData {
    int dim = 0;
    std::vector<BBFixedPoint> points;

    // index of the unique point with all-positive weights, -1 if none/ambiguous
    int minimal_point() const;
    bool valid() const;
};

// Schubert variety X(w): one record per v ≤ w with
// N(v) = {ht(v(β)) : β > 0, v s_β ≤ w}
BBFixedPointData schubert_bb_data(const RootSystem& rs, int w);

bool condition_star(const BBFixedPointData& data);

// q-polynomials use vars()==1 CharPoly (exponents [q, y])
CharPoly q_monomial(int q_exp, int y_exp = 0, Coef c = 1);

// Σ_{v ≤ w} q^{ℓ(v)}
CharPoly poincare_bruhat(const RootSystem& rs, int w);
// Π_{β>0, s_β ≤ w} (1 - q^{ht(β)+1})/(1 - q^{ht(β)}), reduced
RatChar poincare_product(const RootSystem& rs, int w);

// Carrell-Peterson palindromicity of the Bruhat rank polynomial
bool is_rationally_smooth(const RootSystem& rs, int w);

struct BBReport {
    bool star_ok = false;       // hypothesis holds
    bool product_ok = false;    // Σ q^{ℓ(p)} = Π (1-q^{n_i+1})/(1-q^{n_i})
    bool e2_ok = false;         // Σ_p Π (1+y q^{n_i(p)})/(1-q^{n_i(p)}) = Σ_p (-y)^{ℓ(p)}
    bool specialization_ok = false;  // q=-y kills every p ≠ p∘ term
    bool all_ok() const { return star_ok && product_ok && e2_ok && specialization_ok; }
};
BBReport bb_product_check(const BBFixedPointData& data);

}  // namespace kflag
