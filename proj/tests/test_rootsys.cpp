#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "kflag/rootsys.hpp"

using namespace kflag;

TEST_CASE("construction and classical orders") {
    RootSystem a1('A', 1);
    CHECK(a1.num_positive_roots() == 1);
    CHECK(a1.order() == 2);

    RootSystem a2('A', 2);
    CHECK(a2.num_positive_roots() == 3);
    CHECK(a2.order() == 6);
    // positive roots are alpha1, alpha2, alpha1+alpha2
    std::vector<std::vector<int>> coeffs;
    for (const Root& b : a2.positive_roots()) coeffs.push_back(b.simple_coeffs);
    std::sort(coeffs.begin(), coeffs.end());
    CHECK(coeffs == std::vector<std::vector<int>>{{0, 1}, {1, 0}, {1, 1}});

    RootSystem g2('G', 2);
    CHECK(g2.num_positive_roots() == 6);
    CHECK(g2.order() == 12);
    std::vector<int> heights;
    for (const Root& b : g2.positive_roots()) heights.push_back(b.height);
    std::sort(heights.begin(), heights.end());
    CHECK(heights == std::vector<int>{1, 1, 2, 3, 4, 5});

    CHECK(RootSystem('B', 3).order() == 48);
    CHECK(RootSystem('C', 3).order() == 48);
    CHECK(RootSystem('D', 4).order() == 192);
    CHECK(RootSystem('A', 4).order() == 120);
    CHECK(RootSystem('F', 4).order() == 1152);
}

TEST_CASE("unsupported input") {
    CHECK_THROWS_AS(RootSystem('H', 2), UnsupportedType);
    CHECK_THROWS_AS(RootSystem('A', 0), UnsupportedType);
    CHECK_THROWS_AS(RootSystem('E', 6), UnsupportedType);  // |W| over the bound
    CHECK(RootSystem('E', 6, 60000).order() == 51840);
}

TEST_CASE("weight action") {
    RootSystem a1('A', 1);
    CHECK(a1.act(1, {1}) == Weight{-1});  // s(w1) = -w1

    RootSystem a2('A', 2);
    Weight a1a2 = a2.simple_root(1);
    for (int i = 0; i < 2; ++i) a1a2[i] += a2.simple_root(2)[i];
    int s1 = a2.element_from_word({1});
    CHECK(a2.act(s1, a1a2) == a2.simple_root(2));

    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coord(-5, 5);
    for (char fam : {'A', 'B', 'G'}) {
        RootSystem rs(fam, 2);
        int w0 = rs.longest();
        for (int k = 0; k < 100; ++k) {
            Weight lam = {coord(rng), coord(rng)};
            CHECK(rs.act(w0, rs.act(w0, lam)) == lam);
        }
    }
}

TEST_CASE("length, reduced words, longest element") {
    RootSystem a2('A', 2);
    CHECK(a2.reduced_word(a2.identity()).empty());
    CHECK(a2.reduced_word(a2.longest()) == std::vector<int>{1, 2, 1});
    CHECK(a2.length(a2.longest()) == 3);
    CHECK(a2.mul(a2.longest(), a2.longest()) == a2.identity());

    RootSystem b2('B', 2);
    for (int w = 0; w < b2.order(); ++w) {
        // word length = inversion count = stored length
        CHECK(static_cast<int>(b2.reduced_word(w).size()) == b2.length(w));
        int inversions = 0;
        for (const Root& b : b2.positive_roots())
            if (b2.weight_is_negative_root(b2.act(w, b.weight_coords))) ++inversions;
        CHECK(inversions == b2.length(w));
        // w0 is the unique maximum
        if (w != b2.longest()) CHECK(b2.length(w) < b2.length(b2.longest()));
    }
}

TEST_CASE("generator relations as matrix identities") {
    for (auto [fam, rank] : {std::pair<char, int>{'A', 2}, {'B', 2}, {'G', 2}, {'A', 3}}) {
        RootSystem rs(fam, rank);
        for (int i = 1; i <= rank; ++i)
            CHECK(rs.element_from_word({i, i}) == rs.identity());
        for (int i = 1; i <= rank; ++i)
            for (int j = i + 1; j <= rank; ++j) {
                int prod = rs.cartan_matrix()[i - 1][j - 1] * rs.cartan_matrix()[j - 1][i - 1];
                int m = prod == 0 ? 2 : prod == 1 ? 3 : prod == 2 ? 4 : 6;
                std::vector<int> ab, ba;
                for (int k = 0; k < m; ++k) {
                    ab.push_back(k % 2 == 0 ? i : j);
                    ba.push_back(k % 2 == 0 ? j : i);
                }
                CHECK(rs.element_from_word(ab) == rs.element_from_word(ba));
            }
    }
}

namespace {

// subword characterization oracle: v <= w iff some subword of a fixed
// reduced word of w multiplies to v (any subword of a reduced word that
// equals v contains a reduced one)
bool bruhat_subword(const RootSystem& rs, int v, int w) {
    const auto& word = rs.reduced_word(w);
    int n = static_cast<int>(word.size());
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> sub;
        for (int k = 0; k < n; ++k)
            if (mask & (1 << k)) sub.push_back(word[k]);
        if (rs.element_from_word(sub) == v) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("bruhat order") {
    RootSystem a2('A', 2);
    int w0 = a2.longest();
    int s1 = a2.element_from_word({1});
    int s1s2 = a2.element_from_word({1, 2});
    for (int w = 0; w < a2.order(); ++w) {
        CHECK(a2.bruhat_leq(a2.identity(), w));
        CHECK(a2.bruhat_leq(w, w0));
    }
    CHECK_FALSE(a2.bruhat_leq(w0, s1s2));
    CHECK(a2.bruhat_leq(s1, s1s2));

    for (auto [fam, rank] : {std::pair<char, int>{'A', 2}, {'B', 2}, {'A', 3}}) {
        RootSystem rs(fam, rank);
        for (int v = 0; v < rs.order(); ++v)
            for (int w = 0; w < rs.order(); ++w)
                CHECK(rs.bruhat_leq(v, w) == bruhat_subword(rs, v, w));
    }
}

TEST_CASE("length subadditivity, exhaustive rank 2") {
    for (auto [fam, rank] : {std::pair<char, int>{'A', 2}, {'B', 2}, {'G', 2}}) {
        RootSystem rs(fam, rank);
        for (int v = 0; v < rs.order(); ++v)
            for (int w = 0; w < rs.order(); ++w) {
                int vw = rs.mul(v, w);
                CHECK(rs.length(vw) <= rs.length(v) + rs.length(w));
                std::vector<int> cat = rs.reduced_word(v);
                const auto& ww = rs.reduced_word(w);
                cat.insert(cat.end(), ww.begin(), ww.end());
                bool additive = rs.length(vw) == rs.length(v) + rs.length(w);
                CHECK(additive == (static_cast<int>(cat.size()) == rs.length(vw)));
            }
    }
}

TEST_CASE("reflections below an element") {
    RootSystem a2('A', 2);
    CHECK(a2.reflections_leq(a2.identity()).empty());
    CHECK(a2.reflections_leq(a2.longest()).size() == 3);
    auto below = a2.reflections_leq(a2.element_from_word({1, 2}));
    // {alpha1, alpha2} but not alpha1+alpha2
    CHECK(below.size() == 2);
    for (int idx : below) CHECK(a2.positive_roots()[idx].height == 1);
    // reflection elements square to the identity
    for (const Root& b : a2.positive_roots())
        CHECK(a2.mul(b.reflection, b.reflection) == a2.identity());
}

TEST_CASE("heights and the rho-check pairing") {
    RootSystem a2('A', 2);
    for (int i = 1; i <= 2; ++i) CHECK(a2.height_pairing(a2.simple_root(i)) == 1);
    Weight two_rho = {2, 2};
    CHECK(a2.height_pairing(two_rho) == 4);
    CHECK_THROWS_AS(a2.height_pairing(Weight{1, 0}), UnsupportedType);

    RootSystem b2('B', 2);
    for (const Root& b : b2.positive_roots()) {
        CHECK(b2.height_pairing(b.weight_coords) == b.height);
        CHECK(b2.root_height(b.weight_coords) == b.height);
        Weight neg = b.weight_coords;
        for (int& x : neg) x = -x;
        CHECK(b2.root_height(neg) == -b.height);
    }
}
