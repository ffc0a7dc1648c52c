#include "kflag/kclasses.hpp"

namespace kflag {

KClass zero_class(const RootSystem& rs) {
    KClass k;
    k.rs = &rs;
    k.values.assign(rs.order(), RatChar::zero(rs.rank()));
    return k;
}

KClass unit_class(const RootSystem& rs) {
    KClass k;
    k.rs = &rs;
    k.values.assign(rs.order(), RatChar::unit(rs.rank()));
    return k;
}

CharPoly point_denominator(const RootSystem& rs, int w) {
    CharPoly p = CharPoly::unit(rs.rank());
    for (const Root& b : rs.positive_roots()) {
        Weight wa = rs.act(w, b.weight_coords);
        CharPoly f = CharPoly::unit(rs.rank()) - CharPoly::monomial(wa, 0);
        p = p * f;
    }
    return p;
}

KClass point_class(const RootSystem& rs, int w) {
    KClass k = zero_class(rs);
    k.values[w] = RatChar(point_denominator(rs, w));
    return k;
}

KClass line_bundle_class(const RootSystem& rs, const Weight& lambda) {
    KClass k;
    k.rs = &rs;
    k.values.reserve(rs.order());
    for (int w = 0; w < rs.order(); ++w)
        k.values.push_back(RatChar(CharPoly::monomial(rs.act(w, lambda), 0)));
    return k;
}

CharPoly lambda_y_at(const RootSystem& rs, int w) {
    CharPoly p = CharPoly::unit(rs.rank());
    for (const Root& b : rs.positive_roots()) {
        Weight wa = rs.act(w, b.weight_coords);
        CharPoly f = CharPoly::unit(rs.rank()) + CharPoly::monomial(wa, 1);
        p = p * f;
    }
    return p;
}

KClass lambda_y_cotangent(const RootSystem& rs) {
    KClass k;
    k.rs = &rs;
    k.values.reserve(rs.order());
    for (int w = 0; w < rs.order(); ++w) k.values.push_back(RatChar(lambda_y_at(rs, w)));
    return k;
}

KClass tensor(const KClass& a, const KClass& b) {
    KClass k;
    k.rs = a.rs;
    k.values.reserve(a.values.size());
    for (std::size_t i = 0; i < a.values.size(); ++i)
        k.values.push_back(a.values[i] * b.values[i]);
    return k;
}

KClass scale(const KClass& a, const RatChar& c) {
    KClass k;
    k.rs = a.rs;
    k.values.reserve(a.values.size());
    for (const auto& v : a.values) k.values.push_back(v * c);
    return k;
}

KClass add(const KClass& a, const KClass& b) {
    KClass k;
    k.rs = a.rs;
    k.values.reserve(a.values.size());
    for (std::size_t i = 0; i < a.values.size(); ++i)
        k.values.push_back(a.values[i] + b.values[i]);
    return k;
}

KClass sub(const KClass& a, const KClass& b) {
    KClass k;
    k.rs = a.rs;
    k.values.reserve(a.values.size());
    for (std::size_t i = 0; i < a.values.size(); ++i)
        k.values.push_back(a.values[i] - b.values[i]);
    return k;
}

bool classes_equal(const KClass& a, const KClass& b) {
    for (std::size_t i = 0; i < a.values.size(); ++i)
        if (!a.values[i].equals(b.values[i])) return false;
    return true;
}

RatChar euler_char(const KClass& f) {
    const RootSystem& rs = *f.rs;
    std::vector<RatChar> terms;
    terms.reserve(rs.order());
    for (int w = 0; w < rs.order(); ++w) {
        RatChar t = f.values[w];
        for (const Root& b : rs.positive_roots()) {
            Weight wa = rs.act(w, b.weight_coords);
            Expo m(wa.begin(), wa.end());
            m.push_back(0);
            t.push_den(m, +1, 1);
        }
        terms.push_back(std::move(t));
    }
    RatChar s = rat_sum(terms);
    s.reduce();
    return s;
}

RatChar pairing(const KClass& a, const KClass& b) { return euler_char(tensor(a, b)); }

std::function<std::vector<int>(const std::vector<int>&)> weyl_char_map(
    const RootSystem& rs, int w) {
    return [&rs, w](const std::vector<int>& coords) { return rs.act(w, coords); };
}

KClass weyl_left_action(const RootSystem& rs, int w, const KClass& f) {
    KClass k = zero_class(rs);
    auto map = weyl_char_map(rs, w);
    int winv = rs.inverse(w);
    for (int u = 0; u < rs.order(); ++u)
        k.values[u] = f.values[rs.mul(winv, u)].map_char_exponents(map);
    return k;
}

}  // namespace kflag
