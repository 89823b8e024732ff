#include "legcount/chern_oracle.hpp"

#include "doctest.h"
#include "legcount/census.hpp"
#include "legcount/classes.hpp"
#include "support/helpers.hpp"

#include <algorithm>

using namespace legcount;
using testutil::small_weights;

TEST_SUITE_BEGIN("chern_oracle");

TEST_CASE("edge characters") {
    auto w = small_weights(3);
    const Rational li = w.lambdas[0], lj = w.lambdas[1];

    CHECK(edge_character(1, 0, 1, 1, 1, w) == li + lj);
    CHECK(edge_character(1, 0, 1, 2, 0, w) == 3);
    CHECK(edge_character(2, 0, 1, 1, 1, w) == Rational(3, 2) * (li + lj));
}

TEST_CASE("tree characters subtract one vertex term per gluing") {
    auto w = small_weights(3);
    const Rational li = w.lambdas[0], lv = w.lambdas[1], lj = w.lambdas[2];

    // single edge: unchanged
    auto edge = make_edge_tree(3, 0, 1, 2);
    CHECK(tree_character(edge, 1, 1, w) == edge_character(2, 0, 1, 1, 1, w));

    // path: one subtraction at the middle vertex
    auto path = make_path_tree(3, {0, 1, 2}, {1, 1});
    CHECK(tree_character(path, 1, 1, w) == li + lv + lj);

    // star: val(center)-1 = 2 subtractions
    ColoredTree star;
    star.label_bound = 3;
    star.labels = {1, 0, 2, 3};
    star.edges = {Edge{0, 1, 1}, Edge{0, 2, 1}, Edge{0, 3, 1}};
    Rational expected(0);
    for (int leaf = 1; leaf <= 3; ++leaf)
        expected += lv + w.lambdas[star.labels[leaf]];
    expected -= 2 * lv;
    CHECK(tree_character(star, 1, 1, w) == expected);
}

TEST_CASE("solved system matches the closed form on single edges") {
    auto w = small_weights(3);
    const Rational li = w.lambdas[0], lj = w.lambdas[1];
    CHECK(incidence_via_cramer(make_edge_tree(3, 0, 1, 1), 1, w) == li + lj);
    CHECK(incidence_via_cramer(make_edge_tree(3, 0, 1, 3), 1, w) ==
          3 * (li + lj));
}

TEST_CASE("solved system matches the closed form across censuses") {
    // acceptance widens this to label bound 5, degree 3, two random draws
    for (int bound : {3, 5}) {
        const int dmax = bound == 3 ? 2 : 1;
        for (int d = 1; d <= dmax; ++d) {
            auto census = enumerate_graphs(bound, d);
            auto w = small_weights(bound);
            for (const auto& gc : census)
                for (int r = 1; r <= std::min(4, bound - 1); ++r)
                    CHECK(incidence_via_cramer(gc.tree, r, w) ==
                          incidence_class(gc.tree, r, w));
        }
    }
}

TEST_CASE("vertex terms cannot influence the solved system") {
    // adding delta * a^k (k <= r) to every character entry changes nothing
    auto w = small_weights(5);
    auto tree = make_path_tree(5, {0, 1, 2, 3}, {1, 2, 1});
    for (int r = 1; r <= 4; ++r) {
        const auto ch = character_vector(tree, r, w);
        const Rational reference = incidence_from_characters(ch, r);
        CHECK(reference == incidence_class(tree, r, w));
        for (int k = 1; k <= r; ++k) {
            for (const Rational delta :
                 {Rational(1), Rational(-7, 3), Rational(5, 11)}) {
                CharacterVector shifted = ch;
                for (int a = 1; a <= r + 1; ++a)
                    shifted[a - 1] += delta * make_rational(int_pow(a, k), 1);
                CHECK(incidence_from_characters(shifted, r) == reference);
            }
        }
    }
}

TEST_CASE("power sums") {
    CHECK(faulhaber_sum(1, 3) == 6);
    CHECK(faulhaber_sum(0, 5) == 5);
    CHECK(faulhaber_sum(2, 4) == 30);
    CHECK(faulhaber_sum(3, 0) == 0);
}

TEST_CASE("power-sum polynomials") {
    for (int q = 0; q <= 6; ++q) {
        auto coeffs = faulhaber_coefficients(q);
        REQUIRE(static_cast<int>(coeffs.size()) == q + 2);
        CHECK(coeffs[q + 1] == Rational(1, q + 1));
        CHECK(coeffs[0] == 0);  // S^q(0) = 0
        // polynomial evaluates to the sums
        for (unsigned long m = 0; m <= 8; ++m) {
            Rational value(0);
            Rational xp(1);
            for (const Rational& c : coeffs) {
                value += c * xp;
                xp *= static_cast<long>(m);
            }
            CHECK(value == make_rational(faulhaber_sum(q, m), 1));
        }
    }
}

TEST_CASE("binomial convolution of power sums hits the edge-weight sums") {
    // p(x) = C(r,t) sum_j (-1)^j C(t,j) x^{t-j} S^{r+j-t}(x) has leading
    // coefficient 1/(r+1) and satisfies
    //   p(ad) = C(r,t) sum_{k=0}^{ad} (ad-k)^t k^{r-t}
    // for t < r. At t = r the k=0 endpoint contributes (ad)^t 0^0 = (ad)^t,
    // so the two sides differ by exactly that degree-t monomial; a monomial
    // of degree <= r cannot influence the solved incidence system (same
    // mechanism as the vertex-term insensitivity above).
    for (int r = 0; r <= 5; ++r) {
        for (int t = 0; t <= r; ++t) {
            // assemble the coefficients of p
            std::vector<Rational> p(r + 2, Rational(0));
            for (int j = 0; j <= t; ++j) {
                auto s = faulhaber_coefficients(r + j - t);
                Rational scale = make_rational(binomial(r, t) * binomial(t, j), 1);
                if (j % 2)
                    scale = -scale;
                for (int deg = 0; deg < static_cast<int>(s.size()); ++deg)
                    p[deg + t - j] += scale * s[deg];
            }
            CHECK(p[r + 1] == Rational(1, r + 1));
            for (int d = 1; d <= 4; ++d) {
                for (int a = 1; a <= r + 1; ++a) {
                    const long x = static_cast<long>(a) * d;
                    Rational lhs(0);
                    Rational xp(1);
                    for (const Rational& c : p) {
                        lhs += c * xp;
                        xp *= x;
                    }
                    if (t == r)
                        lhs += make_rational(int_pow(Integer(x), t), 1);
                    Integer rhs(0);
                    for (long k = 0; k <= x; ++k)
                        rhs += int_pow(Integer(x - k), t) *
                               int_pow(Integer(k), r - t);
                    rhs *= binomial(r, t);
                    CHECK(lhs == make_rational(rhs, 1));
                }
            }
        }
    }
}

TEST_SUITE_END();
