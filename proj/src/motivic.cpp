#include "kflag/motivic.hpp"

#include <algorithm>

namespace kflag {

namespace {

Expo weight_expo(const Weight& mu, int y_exp) {
    Expo e(mu.begin(), mu.end());
    e.push_back(y_exp);
    return e;
}

CharPoly neg_y_power(int vars, int k) {
    std::vector<int> zero(vars, 0);
    return CharPoly::monomial(zero, k, k % 2 == 0 ? 1 : -1);
}

}  // namespace

KClass mc_class(const RootSystem& rs, int w) {
    return apply_weyl_word(OpKind::T, rs.inverse(w), point_class(rs, rs.identity()));
}

KClass mc_prime_class(const RootSystem& rs, int w) {
    return apply_weyl_word(OpKind::TDual, rs.inverse(w), point_class(rs, rs.identity()));
}

KClass dual_mc_class(const RootSystem& rs, int w) {
    KClass via_serre = serre_dual(mc_class(rs, w));
    KClass via_bar = apply_bar_t(rs.inverse(w), point_class(rs, rs.identity()));
    if (!classes_equal(via_serre, via_bar))
        throw MismatchError("dual_mc_class: serre-dual route != bar-operator route");
    return via_serre;
}

KClass mc_opposite_class(const RootSystem& rs, int w) {
    const int w0 = rs.longest();
    const int arg = rs.inverse(rs.mul(w0, w));
    KClass t = apply_weyl_word(OpKind::TDual, arg, point_class(rs, w0));
    // multiply by λ_y(T*X) pointwise and divide by the scalar λ_y(w_0)
    KClass out = zero_class(rs);
    for (int u = 0; u < rs.order(); ++u) {
        RatChar v = t.values[u].mul_poly(lambda_y_at(rs, u));
        for (const Root& b : rs.positive_roots()) {
            Weight wa = rs.act(w0, b.weight_coords);
            v.push_den(weight_expo(wa, 1), -1, 1);  // (1 + y e^{w_0 α})
        }
        v.reduce();
        out.values[u] = std::move(v);
    }
    return out;
}

KClass schubert_class(const RootSystem& rs, int w) {
    return apply_weyl_word(OpKind::Demazure, rs.inverse(w), point_class(rs, rs.identity()));
}

KClass schubert_opposite_class(const RootSystem& rs, int w) {
    const int w0 = rs.longest();
    return weyl_left_action(rs, w0, schubert_class(rs, rs.mul(w0, w)));
}

KClass class_of_kind(const RootSystem& rs, ClassKind kind, int w, const Weight& lambda) {
    switch (kind) {
        case ClassKind::Mc: return mc_class(rs, w);
        case ClassKind::McOpposite: return mc_opposite_class(rs, w);
        case ClassKind::McPrime: return mc_prime_class(rs, w);
        case ClassKind::DualMc: return dual_mc_class(rs, w);
        case ClassKind::Schubert: return schubert_class(rs, w);
        case ClassKind::SchubertOpposite: return schubert_opposite_class(rs, w);
        case ClassKind::Point: return point_class(rs, w);
        case ClassKind::Line: return line_bundle_class(rs, lambda);
    }
    throw std::logic_error("unreachable");
}

std::vector<KClass> all_cell_classes(const RootSystem& rs, OpKind kind) {
    std::vector<KClass> out(rs.order());
    std::vector<int> by_len(rs.order());
    for (int w = 0; w < rs.order(); ++w) by_len[w] = w;
    std::stable_sort(by_len.begin(), by_len.end(),
                     [&](int a, int b) { return rs.length(a) < rs.length(b); });
    for (int w : by_len) {
        if (rs.length(w) == 0) {
            out[w] = point_class(rs, rs.identity());
            continue;
        }
        // w⁻¹ = s_j·u reduced  ⇒  A_{w⁻¹} = A_j ∘ A_u with u⁻¹ = w·s_j
        int j = rs.reduced_word(rs.inverse(w))[0];
        out[w] = apply_op(kind, j, out[rs.right_mul(w, j)]);
    }
    return out;
}

namespace {

CharPoly chi_vs_tilde(const RootSystem& rs, const Weight& lambda, int w, ClassKind kind,
                      OpKind tilde_kind, const char* name) {
    KClass cls = class_of_kind(rs, kind, w);
    RatChar chi = euler_char(tensor(line_bundle_class(rs, lambda), cls));
    auto lhs = chi.is_polynomial();
    CharPoly rhs = tilde_op(rs, tilde_kind, w, lambda);
    if (!lhs || *lhs != rhs)
        throw MismatchError(std::string(name) + ": localization route != operator route");
    return rhs;
}

}  // namespace

CharPoly chi_demazure(const RootSystem& rs, const Weight& lambda, int w) {
    return chi_vs_tilde(rs, lambda, w, ClassKind::Schubert, OpKind::Demazure, "chi_demazure");
}

CharPoly whittaker_dual(const RootSystem& rs, const Weight& lambda, int w) {
    return chi_vs_tilde(rs, lambda, w, ClassKind::Mc, OpKind::TDual, "whittaker_dual");
}

CharPoly whittaker(const RootSystem& rs, const Weight& lambda, int w) {
    return chi_vs_tilde(rs, lambda, w, ClassKind::McPrime, OpKind::T, "whittaker");
}

CsReport casselman_shalika(const RootSystem& rs, const Weight& lambda) {
    const int r = rs.rank();
    CsReport rep{CharPoly(r), CharPoly(r), false, false};
    for (int w = 0; w < rs.order(); ++w) {
        rep.t_dual_sum += tilde_op(rs, OpKind::TDual, w, lambda);
        rep.t_sum += tilde_op(rs, OpKind::T, w, lambda);
    }
    // Σ_w e^{wλ} Π (1+ye^{wα})/(1-e^{wα})
    std::vector<RatChar> dual_terms;
    for (int w = 0; w < rs.order(); ++w) {
        RatChar t(CharPoly::monomial(rs.act(w, lambda), 0));
        for (const Root& b : rs.positive_roots()) {
            Weight wa = rs.act(w, b.weight_coords);
            CharPoly numfac = CharPoly::unit(r) + CharPoly::monomial(wa, 1);
            t = t.mul_poly(numfac);
            t.push_den(weight_expo(wa, 0), +1, 1);
        }
        dual_terms.push_back(std::move(t));
    }
    RatChar dual_rhs = rat_sum(dual_terms);
    rep.t_dual_ok = dual_rhs.equals(RatChar(rep.t_dual_sum));

    // Π(1+ye^α) Σ_w e^{wλ}/Π(1-e^{wα})
    std::vector<RatChar> weyl_terms;
    for (int w = 0; w < rs.order(); ++w) {
        RatChar t(CharPoly::monomial(rs.act(w, lambda), 0));
        for (const Root& b : rs.positive_roots())
            t.push_den(weight_expo(rs.act(w, b.weight_coords), 0), +1, 1);
        weyl_terms.push_back(std::move(t));
    }
    RatChar rhs = rat_sum(weyl_terms).mul_poly(lambda_y_at(rs, rs.identity()));
    rep.t_ok = rhs.equals(RatChar(rep.t_sum));
    return rep;
}

RatChar pairing_orthogonality(const RootSystem& rs, int u, int v) {
    KClass dual_opp = serre_dual(mc_opposite_class(rs, v));
    // divide pointwise by λ_y(T*X)
    KClass g = zero_class(rs);
    for (int w = 0; w < rs.order(); ++w) {
        RatChar t = dual_opp.values[w];
        for (const Root& b : rs.positive_roots())
            t.push_den(weight_expo(rs.act(w, b.weight_coords), 1), -1, 1);
        g.values[w] = std::move(t);
    }
    RatChar p = pairing(mc_class(rs, u), g);
    p.reduce();
    return p;
}

HeckeProductReport hecke_product_leading(const RootSystem& rs, int u, int v) {
    const int uv = rs.mul(u, rs.inverse(v));
    if (rs.length(uv) != rs.length(u) + rs.length(v))
        throw PreconditionError("hecke_product_leading: lengths do not add");

    KClass iota = point_class(rs, rs.identity());
    // (T_v)⁻¹ = bar(T_{v⁻¹})
    KClass g = apply_weyl_word(OpKind::T, u, apply_bar_t(rs.inverse(v), iota));
    KClass lead = apply_weyl_word(OpKind::T, uv, iota);
    // residual = g - (-y)^{-ℓ(v)} T_{uv⁻¹}(ι_id)
    CharPoly coef = neg_y_power(rs.rank(), -rs.length(v));
    KClass residual = zero_class(rs);
    for (int x = 0; x < rs.order(); ++x)
        residual.values[x] = g.values[x] - lead.values[x].mul_poly(coef);

    HeckeProductReport rep{true, true};
    const int top = rs.inverse(uv);  // support apex of T_{uv⁻¹}(ι_id)
    if (!residual.values[top].equals(RatChar::zero(rs.rank()))) rep.coefficient_ok = false;
    // remaining terms live on strictly smaller Bruhat intervals
    for (int x = 0; x < rs.order(); ++x) {
        if (x == top) continue;
        bool inside = rs.bruhat_leq(x, top) && x != top;
        if (!inside && !residual.values[x].equals(RatChar::zero(rs.rank())))
            rep.support_ok = false;
    }
    return rep;
}

}  // namespace kflag
