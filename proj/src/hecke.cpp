#include "kflag/hecke.hpp"

namespace kflag {

namespace {

Expo weight_expo(const Weight& mu, int y_exp) {
    Expo e(mu.begin(), mu.end());
    e.push_back(y_exp);
    return e;
}

}  // namespace

KClass demazure(int i, const KClass& f) {
    const RootSystem& rs = *f.rs;
    const Weight alpha = rs.simple_root(i);
    KClass out = zero_class(rs);
    for (int w = 0; w < rs.order(); ++w) {
        int wsi = rs.right_mul(w, i);
        Weight wa = rs.act(w, alpha);
        // (f_w - e^{wα_i} f_{ws_i}) / (1 - e^{wα_i})
        RatChar t = f.values[w] - f.values[wsi].mono_mul(weight_expo(wa, 0));
        t.push_den(weight_expo(wa, 0), +1, 1);
        t.reduce();
        out.values[w] = std::move(t);
    }
    return out;
}

KClass t_op(int i, const KClass& f) {
    const RootSystem& rs = *f.rs;
    const Weight alpha = rs.simple_root(i);
    KClass d = demazure(i, f);
    KClass out = zero_class(rs);
    for (int w = 0; w < rs.order(); ++w) {
        Weight wa = rs.act(w, alpha);
        CharPoly fac = CharPoly::unit(rs.rank()) + CharPoly::monomial(wa, 1);
        RatChar t = d.values[w].mul_poly(fac) - f.values[w];
        t.reduce();
        out.values[w] = std::move(t);
    }
    return out;
}

KClass t_dual_op(int i, const KClass& f) {
    const RootSystem& rs = *f.rs;
    const Weight alpha = rs.simple_root(i);
    KClass g = zero_class(rs);
    for (int w = 0; w < rs.order(); ++w) {
        Weight wa = rs.act(w, alpha);
        CharPoly fac = CharPoly::unit(rs.rank()) + CharPoly::monomial(wa, 1);
        g.values[w] = f.values[w].mul_poly(fac);
    }
    KClass d = demazure(i, g);
    KClass out = zero_class(rs);
    for (int w = 0; w < rs.order(); ++w) {
        RatChar t = d.values[w] - f.values[w];
        t.reduce();
        out.values[w] = std::move(t);
    }
    return out;
}

namespace {

// -y⁻¹ (g + (1+y) f) with g = T_i(f) or T_i^∨(f)
KClass hecke_inverse_from(const KClass& g, const KClass& f) {
    const RootSystem& rs = *f.rs;
    const int r = rs.rank();
    CharPoly one_plus_y = CharPoly::unit(r) + CharPoly::monomial(std::vector<int>(r, 0), 1);
    Expo y_inv(r + 1, 0);
    y_inv[r] = -1;
    KClass out = zero_class(rs);
    for (int w = 0; w < rs.order(); ++w) {
        RatChar t = g.values[w] + f.values[w].mul_poly(one_plus_y);
        t = t.mono_mul(y_inv, -1);
        t.reduce();
        out.values[w] = std::move(t);
    }
    return out;
}

}  // namespace

KClass t_inv_op(int i, const KClass& f) { return hecke_inverse_from(t_op(i, f), f); }

KClass t_dual_inv_op(int i, const KClass& f) {
    return hecke_inverse_from(t_dual_op(i, f), f);
}

KClass apply_op(OpKind kind, int i, const KClass& f) {
    switch (kind) {
        case OpKind::Demazure: return demazure(i, f);
        case OpKind::T: return t_op(i, f);
        case OpKind::TDual: return t_dual_op(i, f);
        case OpKind::TInv: return t_inv_op(i, f);
        case OpKind::TDualInv: return t_dual_inv_op(i, f);
    }
    throw std::logic_error("unreachable");
}

KClass apply_weyl_word(OpKind kind, int w, const KClass& f) {
    const RootSystem& rs = *f.rs;
    const std::vector<int>& word = rs.reduced_word(w);
    KClass out = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it) out = apply_op(kind, *it, out);
    return out;
}

KClass apply_bar_t(int w, const KClass& f) {
    // bar(T_w) = T_{w⁻¹}⁻¹ = T(i1)⁻¹∘...∘T(ik)⁻¹ for w = s_{i1}...s_{ik}
    const RootSystem& rs = *f.rs;
    const std::vector<int>& word = rs.reduced_word(w);
    KClass out = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it) out = t_inv_op(*it, out);
    return out;
}

KClass apply_bar_t_dual(int w, const KClass& f) {
    const RootSystem& rs = *f.rs;
    const std::vector<int>& word = rs.reduced_word(w);
    KClass out = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it) out = t_dual_inv_op(*it, out);
    return out;
}

KClass serre_dual(const KClass& f) {
    const RootSystem& rs = *f.rs;
    const int sign = rs.dim() % 2 == 0 ? 1 : -1;
    KClass out = zero_class(rs);
    Weight two_rho(rs.rank(), 2);
    for (int w = 0; w < rs.order(); ++w) {
        RatChar t = f.values[w].dual();
        t = t.mono_mul(weight_expo(rs.act(w, two_rho), 0), sign);
        t.reduce();
        out.values[w] = std::move(t);
    }
    return out;
}

RatChar tilde_demazure(const RootSystem& rs, int i, const RatChar& f) {
    const Weight alpha = rs.simple_root(i);
    auto si = weyl_char_map(rs, rs.element_from_word({i}));
    // (f - e^{α_i}·s_i(f)) / (1 - e^{α_i})
    RatChar t = f - f.map_char_exponents(si).mono_mul(weight_expo(alpha, 0));
    t.push_den(weight_expo(alpha, 0), +1, 1);
    t.reduce();
    return t;
}

RatChar tilde_t(const RootSystem& rs, int i, const RatChar& f) {
    const Weight alpha = rs.simple_root(i);
    CharPoly fac = CharPoly::unit(rs.rank()) + CharPoly::monomial(alpha, 1);
    RatChar t = tilde_demazure(rs, i, f).mul_poly(fac) - f;
    t.reduce();
    return t;
}

RatChar tilde_t_dual(const RootSystem& rs, int i, const RatChar& f) {
    const Weight alpha = rs.simple_root(i);
    CharPoly fac = CharPoly::unit(rs.rank()) + CharPoly::monomial(alpha, 1);
    RatChar t = tilde_demazure(rs, i, f.mul_poly(fac)) - f;
    t.reduce();
    return t;
}

CharPoly tilde_op(const RootSystem& rs, OpKind kind, int w, const Weight& lambda) {
    RatChar f(CharPoly::monomial(lambda, 0));
    const std::vector<int>& word = rs.reduced_word(w);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        switch (kind) {
            case OpKind::Demazure: f = tilde_demazure(rs, *it, f); break;
            case OpKind::T: f = tilde_t(rs, *it, f); break;
            case OpKind::TDual: f = tilde_t_dual(rs, *it, f); break;
            default: throw std::logic_error("tilde_op: unsupported kind");
        }
    }
    auto p = f.is_polynomial();
    if (!p) throw NonPolynomialResult();
    return *p;
}

}  // namespace kflag
