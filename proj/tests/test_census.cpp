#include "legcount/census.hpp"

#include "doctest.h"
#include "support/brute_force.hpp"
#include "support/helpers.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <sstream>

using namespace legcount;

TEST_SUITE_BEGIN("census");

namespace {

std::uint64_t fact(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

std::map<std::uint64_t, int> a_gamma_histogram(const std::vector<GraphClass>& cs) {
    std::map<std::uint64_t, int> h;
    for (const auto& gc : cs)
        ++h[gc.a_gamma];
    return h;
}

}  // namespace

TEST_CASE("tree invariants are enforced") {
    CHECK_NOTHROW(make_path_tree(3, {0, 1, 0}, {1, 2}).validate());

    ColoredTree self_loop;
    self_loop.label_bound = 3;
    self_loop.labels = {0, 1};
    self_loop.edges = {Edge{0, 0, 1}};
    CHECK_THROWS_AS(self_loop.validate(), std::invalid_argument);

    ColoredTree same_label = make_edge_tree(3, 2, 2, 1);
    CHECK_THROWS_AS(same_label.validate(), std::invalid_argument);

    ColoredTree zero_degree = make_edge_tree(3, 0, 1, 0);
    CHECK_THROWS_AS(zero_degree.validate(), std::invalid_argument);

    ColoredTree out_of_range = make_edge_tree(3, 0, 4, 1);
    CHECK_THROWS_AS(out_of_range.validate(), std::invalid_argument);

    ColoredTree cycle;  // |E| = |V|, not a tree
    cycle.label_bound = 3;
    cycle.labels = {0, 1, 2};
    cycle.edges = {Edge{0, 1, 1}, Edge{1, 2, 1}, Edge{2, 0, 1}};
    CHECK_THROWS_AS(cycle.validate(), std::invalid_argument);

    ColoredTree disconnected;  // two components plus a parallel edge
    disconnected.label_bound = 3;
    disconnected.labels = {0, 1, 2, 3};
    disconnected.edges = {Edge{0, 1, 1}, Edge{0, 1, 2}, Edge{2, 3, 1}};
    CHECK_THROWS_AS(disconnected.validate(), std::invalid_argument);
}

TEST_CASE("degree-1 censuses") {
    auto p1 = enumerate_graphs(1, 1);
    REQUIRE(p1.size() == 1);
    CHECK(p1[0].a_gamma == 1);

    // one edge per unordered pair of the 4 fixed points, all a_gamma = 1
    auto p3 = enumerate_graphs(3, 1);
    REQUIRE(p3.size() == 6);
    for (const auto& gc : p3) {
        CHECK(gc.aut_order == 1);
        CHECK(gc.a_gamma == 1);
        CHECK(gc.tree.edges.size() == 1);
    }

    CHECK(enumerate_graphs(5, 1).size() == 15);
}

TEST_CASE("degree-2 census for four fixed points") {
    auto cs = enumerate_graphs(3, 2);
    REQUIRE(cs.size() == 30);

    int paths_distinct_ends = 0, paths_equal_ends = 0, double_edges = 0;
    for (const auto& gc : cs) {
        if (gc.tree.edges.size() == 1) {
            CHECK(gc.tree.edges[0].degree == 2);
            CHECK(gc.a_gamma == 2);  // aut 1, edge degree 2
            CHECK(gc.aut_order == 1);
            ++double_edges;
        } else {
            REQUIRE(gc.tree.edges.size() == 2);
            const auto val = gc.tree.valences();
            int center = -1;
            for (int v = 0; v < 3; ++v)
                if (val[v] == 2)
                    center = v;
            REQUIRE(center >= 0);
            std::vector<int> ends;
            for (int v = 0; v < 3; ++v)
                if (v != center)
                    ends.push_back(gc.tree.labels[v]);
            if (ends[0] == ends[1]) {
                CHECK(gc.aut_order == 2);
                CHECK(gc.a_gamma == 2);
                ++paths_equal_ends;
            } else {
                CHECK(gc.aut_order == 1);
                CHECK(gc.a_gamma == 1);
                ++paths_distinct_ends;
            }
        }
    }
    CHECK(paths_distinct_ends == 12);
    CHECK(paths_equal_ends == 12);
    CHECK(double_edges == 6);

    auto hist = a_gamma_histogram(cs);
    CHECK(hist == std::map<std::uint64_t, int>{{1, 12}, {2, 18}});
}

TEST_CASE("frozen census sizes") {
    CHECK(enumerate_graphs(3, 3).size() == 136);
    CHECK(a_gamma_histogram(enumerate_graphs(3, 3)) ==
          std::map<std::uint64_t, int>{{1, 58}, {2, 60}, {3, 6}, {6, 12}});
    CHECK(enumerate_graphs(5, 2).size() == 105);
    CHECK(a_gamma_histogram(enumerate_graphs(5, 2)) ==
          std::map<std::uint64_t, int>{{1, 60}, {2, 45}});
    CHECK(enumerate_graphs(5, 3).size() == 750);
}

TEST_CASE("canonical key ignores the vertex numbering") {
    std::mt19937_64 rng(2024);
    for (const auto& gc : enumerate_graphs(5, 3)) {
        const int m = gc.tree.vertex_count();
        std::vector<int> perm(m);
        for (int i = 0; i < m; ++i)
            perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        ColoredTree shuffled;
        shuffled.label_bound = gc.tree.label_bound;
        shuffled.labels.resize(m);
        for (int v = 0; v < m; ++v)
            shuffled.labels[perm[v]] = gc.tree.labels[v];
        for (const Edge& e : gc.tree.edges)
            shuffled.edges.push_back(Edge{perm[e.u], perm[e.v], e.degree});
        CHECK(canonical_key(shuffled) == gc.canonical_key);
        CHECK(automorphism_order(shuffled) == gc.aut_order);
    }
}

TEST_CASE("automorphism orders of reference shapes") {
    // path q0 - q1 - q0: the flip
    CHECK(automorphism_order(make_path_tree(3, {0, 1, 0}, {1, 1})) == 2);
    // path with distinct ends: rigid
    CHECK(automorphism_order(make_path_tree(3, {0, 1, 2}, {1, 1})) == 1);
    // single edge, any degree: rigid as a graph
    CHECK(automorphism_order(make_edge_tree(3, 0, 1, 2)) == 1);
    // star with three identical branches
    ColoredTree star;
    star.label_bound = 3;
    star.labels = {0, 1, 1, 1};
    star.edges = {Edge{0, 1, 1}, Edge{0, 2, 1}, Edge{0, 3, 1}};
    CHECK(automorphism_order(star) == 6);
    // degree breaks one branch's symmetry
    star.edges[0].degree = 2;
    CHECK(automorphism_order(star) == 2);
}

TEST_CASE("rejects bad arguments") {
    CHECK_THROWS_AS(enumerate_graphs(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_graphs(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_graphs(-1, -1), std::invalid_argument);
}

TEST_CASE("matches the exhaustive oracle for small parameters") {
    for (int bound = 1; bound <= 3; ++bound) {
        for (int d = 1; d <= 3; ++d) {
            CAPTURE(bound);
            CAPTURE(d);
            auto production = enumerate_graphs(bound, d);
            auto oracle = brute::oracle_census(bound, d);
            REQUIRE(production.size() == oracle.size());

            std::uint64_t raw_total = 0;
            for (const auto& [form, cls] : oracle)
                raw_total += cls.labeled_occurrences;

            std::set<brute::CanonicalForm> seen;
            for (const auto& gc : production) {
                // map the representative into the oracle's canonical form
                std::vector<std::pair<int, int>> edges;
                std::vector<int> degs;
                for (const Edge& e : gc.tree.edges) {
                    edges.emplace_back(e.u, e.v);
                    degs.push_back(e.degree);
                }
                const int m = gc.tree.vertex_count();
                std::vector<int> idperm(m);
                for (int i = 0; i < m; ++i)
                    idperm[i] = i;
                auto base =
                    brute::apply_perm(edges, degs, gc.tree.labels, idperm);
                auto best = base;
                std::vector<int> p = idperm;
                do {
                    auto cand =
                        brute::apply_perm(edges, degs, gc.tree.labels, p);
                    if (cand < best)
                        best = cand;
                } while (std::next_permutation(p.begin(), p.end()));

                auto it = oracle.find(best);
                REQUIRE_MESSAGE(it != oracle.end(),
                                "production class missing from oracle: ",
                                gc.canonical_key);
                CHECK(it->second.aut_order == gc.aut_order);
                CHECK(it->second.a_gamma == gc.a_gamma);
                CHECK_MESSAGE(seen.insert(best).second,
                              "two production classes are isomorphic: ",
                              gc.canonical_key);
                // orbit size of the class among labeled trees
                CHECK(it->second.labeled_occurrences ==
                      fact(m) / gc.aut_order);
            }
            // every class accounts for |V|!/|Aut| labeled trees
            std::uint64_t orbit_total = 0;
            for (const auto& gc : production)
                orbit_total += fact(gc.tree.vertex_count()) / gc.aut_order;
            CHECK(orbit_total == raw_total);
        }
    }
}

TEST_CASE("recomputing the automorphism order reproduces the stored one") {
    for (const auto& gc : enumerate_graphs(3, 3)) {
        CHECK(automorphism_order(gc.tree) == gc.aut_order);
        CHECK(canonical_key(gc.tree) == gc.canonical_key);
        gc.tree.validate();
        std::uint64_t pd = 1;
        for (const Edge& e : gc.tree.edges)
            pd *= static_cast<std::uint64_t>(e.degree);
        CHECK(gc.a_gamma == gc.aut_order * pd);
        CHECK(fact(gc.tree.vertex_count()) % gc.aut_order == 0);
    }
}

TEST_CASE("census sizes are monotone in the label bound") {
    for (int d = 1; d <= 3; ++d) {
        std::size_t prev = 0;
        for (int bound = 1; bound <= 4; ++bound) {
            auto size = enumerate_graphs(bound, d).size();
            CHECK(size >= prev);
            prev = size;
        }
    }
}

TEST_CASE("deterministic ordering") {
    auto a = enumerate_graphs(3, 2);
    auto b = enumerate_graphs(3, 2);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].canonical_key == b[i].canonical_key);
        if (i + 1 < a.size())
            CHECK(a[i].canonical_key < a[i + 1].canonical_key);
    }
}

TEST_CASE("cache file round-trips bit-exactly") {
    auto cs = enumerate_graphs(3, 2);
    std::ostringstream first;
    write_census(first, 3, 2, cs);

    std::istringstream in(first.str());
    auto reread = read_census(in, 3, 2);
    REQUIRE(reread.size() == cs.size());

    std::ostringstream second;
    write_census(second, 3, 2, reread);
    CHECK(first.str() == second.str());

    for (std::size_t i = 0; i < cs.size(); ++i) {
        CHECK(reread[i].canonical_key == cs[i].canonical_key);
        CHECK(reread[i].aut_order == cs[i].aut_order);
        CHECK(reread[i].a_gamma == cs[i].a_gamma);
    }
}

TEST_CASE("cache rejects mismatched headers") {
    auto cs = enumerate_graphs(3, 1);
    std::ostringstream out;
    write_census(out, 3, 1, cs);
    std::istringstream in(out.str());
    CHECK_THROWS_AS(read_census(in, 3, 2), std::runtime_error);
}

TEST_CASE("cache rejects corrupted records") {
    auto cs = enumerate_graphs(3, 1);
    std::ostringstream out;
    write_census(out, 3, 1, cs);
    std::string text = out.str();

    // flip a stored automorphism order; the canonical re-check must notice
    auto pos = text.find("\t1\t");
    REQUIRE(pos != std::string::npos);
    text[pos + 1] = '2';
    std::istringstream in(text);
    CHECK_THROWS_AS(read_census(in, 3, 1), std::runtime_error);
}

TEST_SUITE_END();
