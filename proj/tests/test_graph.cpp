#include "doctest.h"

#include <random>
#include <set>

#include "coverideal/constructions.hpp"
#include "coverideal/graph.hpp"
#include "test_util.hpp"

using namespace cvi;
using testutil::mask_of;

namespace {

Graph cycle(int n) {
    std::vector<std::string> labels;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (int i = 0; i < n; ++i) {
        labels.push_back("x" + std::to_string(i + 1));
        edges.emplace_back(i, (i + 1) % n);
    }
    return Graph::from_edges(std::move(labels), edges);
}

Graph path(int n) {
    std::vector<std::string> labels;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (int i = 0; i < n; ++i) {
        labels.push_back("x" + std::to_string(i + 1));
        if (i) edges.emplace_back(i - 1, i);
    }
    return Graph::from_edges(std::move(labels), edges);
}

Graph complete(int n) {
    std::vector<std::string> labels;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (int i = 0; i < n; ++i) {
        labels.push_back("x" + std::to_string(i + 1));
        for (int j = 0; j < i; ++j) edges.emplace_back(j, i);
    }
    return Graph::from_edges(std::move(labels), edges);
}

} // namespace

TEST_CASE("maximal independent sets match exhaustive enumeration") {
    std::mt19937 rng(101);
    for (int t = 0; t < 120; ++t) {
        Graph g = testutil::random_graph(rng, 1, 10);
        std::set<std::uint64_t> expected = testutil::brute_force_mis(g);
        std::set<std::uint64_t> actual;
        for (const auto& s : maximal_independent_sets(g)) actual.insert(mask_of(s));
        REQUIRE(actual == expected);
        // Minimal vertex covers are exactly the complements.
        std::set<std::uint64_t> covers;
        for (const auto& s : minimal_vertex_covers(g)) covers.insert(mask_of(s));
        std::set<std::uint64_t> expected_covers;
        std::uint64_t full = (g.vertex_count() == 64) ? ~0ull : (1ull << g.vertex_count()) - 1;
        for (auto m : expected) expected_covers.insert(full & ~m);
        REQUIRE(covers == expected_covers);
    }
}

TEST_CASE("shedding test matches the literal definition") {
    std::mt19937 rng(102);
    for (int t = 0; t < 80; ++t) {
        Graph g = testutil::random_graph(rng, 1, 8);
        for (std::size_t v = 0; v < g.vertex_count(); ++v)
            CHECK(is_shedding(g, v) == testutil::brute_force_shedding(g, v));
    }
}

TEST_CASE("simplicial vertices and cliques") {
    Graph k4 = complete(4);
    for (std::size_t v = 0; v < 4; ++v) CHECK(is_simplicial(k4, v));
    CHECK(is_clique(k4, k4.full_set()));
    Graph c5 = cycle(5);
    for (std::size_t v = 0; v < 5; ++v) CHECK_FALSE(is_simplicial(c5, v));
    CHECK_FALSE(is_clique(c5, c5.full_set()));
    Graph p3 = path(3);
    CHECK(is_simplicial(p3, 0));
    CHECK_FALSE(is_simplicial(p3, 1));
}

TEST_CASE("matching numbers and Cameron-Walker recognition") {
    CHECK(matching_number(cycle(6)) == 3);
    CHECK(induced_matching_number(cycle(6)) == 2);
    CHECK_FALSE(is_cameron_walker(cycle(6)));
    CHECK(matching_number(path(4)) == 2);
    CHECK(induced_matching_number(path(4)) == 1);
    // A star is Cameron-Walker: nu = ma = 1.
    Graph star = Graph::from_labeled_edges({"c", "a", "b", "d"},
                                           {{"c", "a"}, {"c", "b"}, {"c", "d"}});
    CHECK(is_cameron_walker(star));
}

TEST_CASE("connected components and disjoint union") {
    Graph g = Graph::from_labeled_edges({"a", "b", "c", "d", "e"}, {{"a", "b"}, {"c", "d"}});
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 3);
    Graph u = disjoint_union({path(2), cycle(3)});
    CHECK(u.vertex_count() == 5);
    CHECK(u.edge_count() == 4);
    CHECK(connected_components(u).size() == 2);
}

TEST_CASE("graph isomorphism backtracking") {
    CHECK(graph_isomorphic(cycle(4), cycle(4)).has_value());
    CHECK_FALSE(graph_isomorphic(cycle(4), path(4)).has_value());
    Graph relabeled = Graph::from_labeled_edges({"p", "q", "r", "s"},
                                                {{"q", "s"}, {"s", "p"}, {"p", "r"}, {"r", "q"}});
    auto iso = graph_isomorphic(cycle(4), relabeled);
    REQUIRE(iso.has_value());
    for (const auto& [a, b] : cycle(4).edges()) CHECK(relabeled.has_edge((*iso)[a], (*iso)[b]));
}

TEST_CASE("constructions: whiskers, star completes, companions") {
    Graph c4 = cycle(4);
    Graph w = add_whiskers(c4, c4.full_set());
    CHECK(w.vertex_count() == 8);
    CHECK(w.edge_count() == 8);

    Graph sc = star_complete({"x", {3, 3}});
    CHECK(sc.vertex_count() == 5); // center + 2 + 2
    CHECK(sc.edge_count() == 6);   // two triangles through the center
    CHECK(is_pure({"x", {3, 3}}));
    CHECK_FALSE(is_pure({"x", {2, 3}}));

    Graph g2 = companion_graph(c4, 2);
    CHECK(g2.vertex_count() == 8);
    // Each base edge contributes pairs (p,q) with p+q <= 3: (1,1),(1,2),(2,1).
    CHECK(g2.edge_count() == 12);
    CHECK(companion_graph(c4, 0).vertex_count() == 0);
    // k = 1 companion is the original graph up to the _1 label suffix.
    Graph g1 = companion_graph(c4, 1);
    CHECK(graph_isomorphic(g1, c4).has_value());
    CHECK(g1.label(0) == "x1_1");
}

TEST_CASE("clique whiskering validates partitions") {
    Graph c4 = cycle(4);
    CliquePartition pi = clique_partition_from_labels(c4, {{"x1", "x2"}, {"x3", "x4"}});
    Graph w = clique_whisker(c4, pi);
    CHECK(w.vertex_count() == 6);
    CHECK(w.edge_count() == 8);
    CHECK_THROWS_AS(clique_partition_from_labels(c4, {{"x1", "x3"}, {"x2", "x4"}}),
                    domain_error); // parts must be cliques
    CHECK_THROWS_AS(clique_partition_from_labels(c4, {{"x1", "x2"}}),
                    domain_error); // must cover V
}
