#include "kflag/poincare.hpp"

#include <algorithm>

namespace kflag {

int BBFixedPointData::minimal_point() const {
    int found = -1;
    for (std::size_t p = 0; p < points.size(); ++p) {
        bool all_pos = std::all_of(points[p].weights.begin(), points[p].weights.end(),
                                   [](int n) { return n > 0; });
        if (all_pos) {
            if (found >= 0) return -1;
            found = static_cast<int>(p);
        }
    }
    return found;
}

bool BBFixedPointData::valid() const {
    if (points.empty()) return false;
    for (const auto& p : points) {
        if (static_cast<int>(p.weights.size()) != dim) return false;
        for (int n : p.weights)
            if (n == 0) return false;
    }
    return minimal_point() >= 0;
}

BBFixedPointData schubert_bb_data(const RootSystem& rs, int w) {
    BBFixedPointData data;
    data.dim = rs.length(w);
    for (int v = 0; v < rs.order(); ++v) {
        if (!rs.bruhat_leq(v, w)) continue;
        BBFixedPoint p;
        std::string label;
        for (int i : rs.reduced_word(v)) label += "s" + std::to_string(i);
        p.label = label.empty() ? "id" : label;
        p.cell_dim = rs.length(v);
        for (const Root& b : rs.positive_roots()) {
            int vsb = rs.mul(v, b.reflection);
            if (!rs.bruhat_leq(vsb, w)) continue;
            p.weights.push_back(rs.root_height(rs.act(v, b.weight_coords)));
        }
        data.points.push_back(std::move(p));
    }
    return data;
}

bool condition_star(const BBFixedPointData& data) {
    int p0 = data.minimal_point();
    for (std::size_t p = 0; p < data.points.size(); ++p) {
        if (static_cast<int>(p) == p0) continue;
        const auto& ws = data.points[p].weights;
        if (std::find(ws.begin(), ws.end(), -1) == ws.end()) return false;
    }
    return true;
}

CharPoly q_monomial(int q_exp, int y_exp, Coef c) {
    return CharPoly::monomial(std::vector<int>{q_exp}, y_exp, std::move(c));
}

CharPoly poincare_bruhat(const RootSystem& rs, int w) {
    CharPoly p(1);
    for (int v = 0; v < rs.order(); ++v)
        if (rs.bruhat_leq(v, w)) p += q_monomial(rs.length(v));
    return p;
}

RatChar poincare_product(const RootSystem& rs, int w) {
    RatChar r = RatChar::unit(1);
    for (int b : rs.reflections_leq(w)) {
        int ht = rs.positive_roots()[b].height;
        r = r.mul_poly(CharPoly::unit(1) - q_monomial(ht + 1));
        r.push_den(Expo{ht, 0}, +1, 1);
    }
    r.reduce();
    return r;
}

bool is_rationally_smooth(const RootSystem& rs, int w) {
    CharPoly p = poincare_bruhat(rs, w);
    const int top = rs.length(w);
    // palindromic: coefficient of q^i equals coefficient of q^{top-i}
    std::map<int, Coef> coeff;
    for (const auto& [e, c] : p.terms()) coeff[e[0]] = c;
    for (int i = 0; i <= top; ++i) {
        Coef a = coeff.count(i) ? coeff[i] : 0;
        Coef b = coeff.count(top - i) ? coeff[top - i] : 0;
        if (a != b) return false;
    }
    return true;
}

BBReport bb_product_check(const BBFixedPointData& data) {
    BBReport rep;
    rep.star_ok = condition_star(data);
    if (!rep.star_ok) return rep;
    const int p0 = data.minimal_point();

    // (i)  Σ_p q^{ℓ(p)}  vs  Π_i (1-q^{n_i+1})/(1-q^{n_i}), n_i from p∘
    CharPoly bruhat_sum(1);
    for (const auto& p : data.points) bruhat_sum += q_monomial(p.cell_dim);
    RatChar prod = RatChar::unit(1);
    for (int n : data.points[p0].weights) {
        prod = prod.mul_poly(CharPoly::unit(1) - q_monomial(n + 1));
        prod.push_den(Expo{n, 0}, +1, 1);
    }
    rep.product_ok = prod.equals(RatChar(bruhat_sum));

    // (ii)  Σ_p Π (1+y q^{n_i(p)})/(1-q^{n_i(p)})  =  Σ_p (-y)^{ℓ(p)}
    auto point_term = [&](const BBFixedPoint& p) {
        RatChar t = RatChar::unit(1);
        for (int n : p.weights) {
            t = t.mul_poly(CharPoly::unit(1) + q_monomial(n, 1));
            t.push_den(Expo{n, 0}, +1, 1);
        }
        return t;
    };
    std::vector<RatChar> terms;
    for (const auto& p : data.points) terms.push_back(point_term(p));
    RatChar e2 = rat_sum(terms);
    CharPoly neg_y_sum(1);
    for (const auto& p : data.points)
        neg_y_sum += q_monomial(0, p.cell_dim, p.cell_dim % 2 == 0 ? 1 : -1);
    rep.e2_ok = e2.equals(RatChar(neg_y_sum));

    // (iii)  at q = -y each p ≠ p∘ term's cleared numerator vanishes
    // common denominator: per-factor max multiplicity over all terms
    std::map<DenFactor, int> common;
    for (const auto& t : terms)
        for (const auto& [f, m] : t.den())
            common[f] = std::max(common[f], m);
    rep.specialization_ok = true;
    CharPoly minus_y = CharPoly::monomial(std::vector<int>{0}, 1, -1);
    for (std::size_t p = 0; p < data.points.size(); ++p) {
        if (static_cast<int>(p) == p0) continue;
        CharPoly n = terms[p].num();
        for (const auto& [f, m] : common) {
            int have = terms[p].den().count(f) ? terms[p].den().at(f) : 0;
            for (int k = have; k < m; ++k) n = n * factor_poly(1, f);
        }
        // substitute q := -y  (q^a y^b ↦ (-1)^a y^{a+b})
        CharPoly at_minus_y(1);
        for (const auto& [e, c] : n.terms()) {
            Coef cc = (e[0] % 2 == 0) ? c : -c;
            at_minus_y.add_term(Expo{0, e[0] + e[1]}, cc);
        }
        if (!at_minus_y.is_zero()) rep.specialization_ok = false;
    }
    return rep;
}

}  // namespace kflag
