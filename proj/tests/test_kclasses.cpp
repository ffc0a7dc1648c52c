#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kflag/kclasses.hpp"

using namespace kflag;

namespace {

KClass random_class(const RootSystem& rs, std::mt19937& rng) {
    std::uniform_int_distribution<int> e(-2, 2), c(-4, 4);
    KClass k = zero_class(rs);
    for (int w = 0; w < rs.order(); ++w) {
        CharPoly p(rs.rank());
        for (int t = 0; t < 3; ++t) {
            Expo ex(rs.rank() + 1);
            for (int& x : ex) x = e(rng);
            p.add_term(ex, c(rng));
        }
        k.values[w] = RatChar(p);
    }
    return k;
}

}  // namespace

TEST_CASE("point classes") {
    RootSystem a1('A', 1);
    KClass iota = point_class(a1, a1.identity());
    // alpha = 2w in A1
    CHECK(*iota.values[0].is_polynomial() ==
          CharPoly::unit(1) - CharPoly::monomial({2}, 0));
    CHECK(iota.values[1].is_zero());

    RootSystem a2('A', 2);
    for (int w = 0; w < a2.order(); ++w) {
        KClass p = point_class(a2, w);
        for (int u = 0; u < a2.order(); ++u)
            if (u != w) CHECK(p.values[u].is_zero());
        RatChar chi = euler_char(p);
        CHECK(chi.equals(RatChar::unit(2)));
    }
}

TEST_CASE("line bundle classes") {
    RootSystem a1('A', 1);
    CHECK(classes_equal(line_bundle_class(a1, {0}), unit_class(a1)));
    KClass l = line_bundle_class(a1, {-1});
    CHECK(*l.values[0].is_polynomial() == CharPoly::monomial({-1}, 0));
    CHECK(*l.values[1].is_polynomial() == CharPoly::monomial({1}, 0));

    RootSystem b2('B', 2);
    KClass a = line_bundle_class(b2, {1, -2});
    KClass b = line_bundle_class(b2, {-2, 1});
    CHECK(classes_equal(tensor(a, b), line_bundle_class(b2, {-1, -1})));
}

TEST_CASE("lambda_y of the cotangent bundle") {
    RootSystem a1('A', 1);
    CHECK(lambda_y_at(a1, a1.identity()) ==
          CharPoly::unit(1) + CharPoly::monomial({2}, 1));

    RootSystem a2('A', 2);
    // product over the three positive roots at the identity
    CharPoly expect = CharPoly::unit(2);
    for (const Root& b : a2.positive_roots()) {
        CharPoly f = CharPoly::unit(2) + CharPoly::monomial(b.weight_coords, 1);
        expect = expect * f;
    }
    CHECK(lambda_y_at(a2, a2.identity()) == expect);

    // y = -1 recovers the localization denominator
    CharPoly minus_one = CharPoly::monomial({0, 0}, 0, -1);
    for (int w = 0; w < a2.order(); ++w)
        CHECK(lambda_y_at(a2, w).subst_y(minus_one) == point_denominator(a2, w));
}

TEST_CASE("euler characteristic by localization") {
    RootSystem a1('A', 1);
    auto chi = [&](const Weight& lam) { return euler_char(line_bundle_class(a1, lam)); };
    auto p = chi({-1}).is_polynomial();
    REQUIRE(p);
    CHECK(*p == CharPoly::monomial({1}, 0) + CharPoly::monomial({-1}, 0));
    CHECK(chi({1}).equals(RatChar::zero(1)));  // vanishing Euler characteristic
}

TEST_CASE("pairing") {
    RootSystem a2('A', 2);
    std::mt19937 rng(7);
    for (int w = 0; w < a2.order(); ++w)
        CHECK(pairing(unit_class(a2), point_class(a2, w)).equals(RatChar::unit(2)));
    KClass a = random_class(a2, rng), b = random_class(a2, rng);
    CHECK(pairing(a, b).equals(pairing(b, a)));
    Weight lam = {2, -1};
    RatChar v = pairing(line_bundle_class(a2, lam), point_class(a2, a2.identity()));
    CHECK(*v.is_polynomial() == CharPoly::monomial(lam, 0));
}

TEST_CASE("tensor is the pointwise product") {
    RootSystem a2('A', 2);
    std::mt19937 rng(13);
    KClass a = random_class(a2, rng), b = random_class(a2, rng);
    CHECK(classes_equal(tensor(a, b), tensor(b, a)));
    CHECK(classes_equal(tensor(unit_class(a2), a), a));
    Weight lam = {1, 1};
    KClass lhs = tensor(point_class(a2, 2), line_bundle_class(a2, lam));
    KClass rhs = scale(point_class(a2, 2),
                       RatChar(CharPoly::monomial(a2.act(2, lam), 0)));
    CHECK(classes_equal(lhs, rhs));
}

TEST_CASE("left Weyl action") {
    RootSystem a2('A', 2);
    std::mt19937 rng(19);
    KClass f = random_class(a2, rng);
    for (int v = 0; v < a2.order(); ++v)
        for (int w = 0; w < a2.order(); ++w) {
            KClass lhs = weyl_left_action(a2, a2.mul(v, w), f);
            KClass rhs = weyl_left_action(a2, v, weyl_left_action(a2, w, f));
            CHECK(classes_equal(lhs, rhs));
        }
    for (int w = 0; w < a2.order(); ++w) {
        CHECK(classes_equal(weyl_left_action(a2, w, unit_class(a2)), unit_class(a2)));
        CHECK(classes_equal(weyl_left_action(a2, w, lambda_y_cotangent(a2)),
                            lambda_y_cotangent(a2)));
        for (int u = 0; u < a2.order(); ++u)
            CHECK(classes_equal(weyl_left_action(a2, w, point_class(a2, u)),
                                point_class(a2, a2.mul(w, u))));
    }
}

TEST_CASE("fixed-point basis decomposition round-trips") {
    RootSystem b2('B', 2);
    std::mt19937 rng(23);
    KClass f = random_class(b2, rng);
    // f = sum_w c_w iota_w with c_w = f|_w / iota_w|_w
    KClass rebuilt = zero_class(b2);
    for (int w = 0; w < b2.order(); ++w) {
        RatChar c = f.values[w];
        for (const Root& b : b2.positive_roots()) {
            Weight wa = b2.act(w, b.weight_coords);
            Expo m(wa.begin(), wa.end());
            m.push_back(0);
            c.push_den(m, +1, 1);
        }
        rebuilt = add(rebuilt, scale(point_class(b2, w), c));
    }
    CHECK(classes_equal(rebuilt, f));
}
