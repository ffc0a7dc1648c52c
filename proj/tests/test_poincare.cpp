#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>

#include "kflag/json_io.hpp"
#include "kflag/poincare.hpp"

using namespace kflag;

namespace {

BBFixedPointData load_fixture(const std::string& name) {
    const char* dir = std::getenv("KFLAG_FIXTURES");
    REQUIRE(dir != nullptr);
    std::ifstream in(std::string(dir) + "/" + name);
    REQUIRE(in.good());
    return bb_data_from_json(json::parse(in));
}

}  // namespace

TEST_CASE("bruhat rank polynomials") {
    RootSystem a2('A', 2);
    CHECK(poincare_bruhat(a2, a2.identity()) == CharPoly::unit(1));
    CHECK(poincare_bruhat(a2, a2.element_from_word({1, 2})) ==
          q_monomial(0) + q_monomial(1, 0, 2) + q_monomial(2));
    CHECK(poincare_bruhat(a2, a2.longest()) ==
          q_monomial(0) + q_monomial(1, 0, 2) + q_monomial(2, 0, 2) + q_monomial(3));
}

TEST_CASE("height product formula") {
    RootSystem a2('A', 2);
    CHECK(poincare_product(a2, a2.identity()).equals(RatChar::unit(1)));
    CHECK(poincare_product(a2, a2.element_from_word({1, 2}))
              .equals(RatChar(q_monomial(0) + q_monomial(1, 0, 2) + q_monomial(2))));
    CHECK(poincare_product(a2, a2.longest())
              .equals(RatChar(poincare_bruhat(a2, a2.longest()))));
    // full-flag identity in several types
    for (auto [fam, rank] : {std::pair<char, int>{'A', 3}, {'B', 2}, {'G', 2}, {'B', 3}}) {
        RootSystem rs(fam, rank);
        CHECK(poincare_product(rs, rs.longest())
                  .equals(RatChar(poincare_bruhat(rs, rs.longest()))));
    }
}

TEST_CASE("rational smoothness by palindromicity") {
    RootSystem a3('A', 3);
    CHECK(is_rationally_smooth(a3, a3.longest()));
    CHECK_FALSE(is_rationally_smooth(a3, a3.element_from_word({2, 1, 3, 2})));
    for (int w = 0; w < a3.order(); ++w)
        if (a3.length(w) <= 1) CHECK(is_rationally_smooth(a3, w));
}

TEST_CASE("schubert fixed point data") {
    RootSystem a2('A', 2);
    BBFixedPointData triv = schubert_bb_data(a2, a2.identity());
    CHECK(triv.dim == 0);
    CHECK(triv.points.size() == 1);
    CHECK(triv.points[0].weights.empty());

    BBFixedPointData full = schubert_bb_data(a2, a2.longest());
    CHECK(full.dim == 3);
    CHECK(full.points.size() == 6);
    for (const auto& p : full.points) {
        std::vector<int> n = p.weights;
        std::sort(n.begin(), n.end());
        if (p.cell_dim == 0) CHECK(n == std::vector<int>{1, 1, 2});
        if (p.cell_dim == 3) CHECK(n == std::vector<int>{-2, -1, -1});
    }
    CHECK(full.valid());
    CHECK(condition_star(full));
    CHECK(full.points[full.minimal_point()].cell_dim == 0);
}

TEST_CASE("condition on non-minimal weights") {
    BBFixedPointData bad;
    bad.dim = 2;
    bad.points = {{"p0", 0, {1, 2}}, {"p1", 1, {2, -3}}, {"p2", 2, {-1, -2}}};
    CHECK(bad.valid());
    CHECK_FALSE(condition_star(bad));
    BBReport rep = bb_product_check(bad);
    CHECK_FALSE(rep.star_ok);
}

TEST_CASE("product and localization checks on fixture data") {
    for (const char* name : {"p1.json", "p2.json"}) {
        BBFixedPointData data = load_fixture(name);
        CHECK(data.valid());
        CHECK(condition_star(data));
        BBReport rep = bb_product_check(data);
        CHECK(rep.star_ok);
        CHECK(rep.product_ok);
        CHECK(rep.e2_ok);
        CHECK(rep.specialization_ok);
    }
}

TEST_CASE("product and localization checks on full flag data") {
    for (auto [fam, rank] : {std::pair<char, int>{'A', 2}, {'B', 2}}) {
        RootSystem rs(fam, rank);
        BBReport rep = bb_product_check(schubert_bb_data(rs, rs.longest()));
        CHECK(rep.star_ok);
        CHECK(rep.product_ok);
        CHECK(rep.e2_ok);
        CHECK(rep.specialization_ok);
    }
}

TEST_CASE("signed length sum equals the y-genus of the flag variety") {
    RootSystem b2('B', 2);
    auto p = euler_char(lambda_y_cotangent(b2)).is_polynomial();
    REQUIRE(p);
    CharPoly expect(2);
    for (int w = 0; w < b2.order(); ++w) {
        int l = b2.length(w);
        expect += CharPoly::monomial({0, 0}, l, l % 2 == 0 ? 1 : -1);
    }
    CHECK(*p == expect);
}
