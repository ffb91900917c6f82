#include "doctest.h"

#include <random>

#include "coverideal/monomial_ideal.hpp"
#include "test_util.hpp"

using namespace cvi;

namespace {

MonomialIdeal ideal_of(const Ring& r, const std::vector<std::vector<std::uint32_t>>& gens) {
    std::vector<Monomial> ms;
    for (const auto& e : gens) ms.emplace_back(e);
    return MonomialIdeal::make(r, std::move(ms));
}

} // namespace

TEST_CASE("minimalization: membership preserved, generators irredundant") {
    std::mt19937 rng(201);
    for (int t = 0; t < 120; ++t) {
        std::size_t n = 2 + rng() % 4;
        std::vector<Monomial> raw;
        for (int i = 0; i < 8; ++i) {
            Monomial m = testutil::random_monomial(rng, n);
            if (!m.is_one()) raw.push_back(m);
        }
        MonomialIdeal a = MonomialIdeal::make(testutil::small_ring(n), raw);
        // Membership agrees with the raw generating set on random probes.
        for (int q = 0; q < 20; ++q) {
            Monomial m = testutil::random_monomial(rng, n, 5);
            bool raw_member = false;
            for (const auto& g : raw) raw_member = raw_member || g.divides(m);
            CHECK(a.contains(m) == raw_member);
        }
        // No generator divides another.
        const auto& gens = a.generators();
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (std::size_t j = 0; j < gens.size(); ++j)
                if (i != j) CHECK_FALSE(gens[i].divides(gens[j]));
    }
}

TEST_CASE("intersection and product agree with membership semantics") {
    std::mt19937 rng(202);
    for (int t = 0; t < 60; ++t) {
        std::size_t n = 2 + rng() % 3;
        MonomialIdeal a = testutil::random_ideal(rng, n, 4);
        MonomialIdeal b = testutil::random_ideal(rng, n, 4);
        MonomialIdeal meet = intersect(a, b);
        MonomialIdeal prod = multiply(a, b);
        for (int q = 0; q < 25; ++q) {
            Monomial m = testutil::random_monomial(rng, n, 6);
            CHECK(meet.contains(m) == (a.contains(m) && b.contains(m)));
            if (prod.contains(m)) CHECK(meet.contains(m)); // IJ subset of I cap J
        }
    }
}

TEST_CASE("colon ideal: (I : f) membership oracle") {
    std::mt19937 rng(203);
    for (int t = 0; t < 60; ++t) {
        std::size_t n = 2 + rng() % 3;
        MonomialIdeal a = testutil::random_ideal(rng, n, 4);
        if (a.is_zero()) continue;
        Monomial f = testutil::random_monomial(rng, n, 2);
        MonomialIdeal c = colon_by_monomial(a, f);
        for (int q = 0; q < 25; ++q) {
            Monomial m = testutil::random_monomial(rng, n, 5);
            CHECK(c.contains(m) == a.contains(m * f));
        }
    }
}

TEST_CASE("powers: k = 0 is the unit ideal, membership is consistent") {
    Ring r = testutil::small_ring(2);
    MonomialIdeal a = ideal_of(r, {{1, 0}, {0, 1}}); // (x, y)
    CHECK(power(a, 0).is_unit());
    MonomialIdeal sq = power(a, 2);
    CHECK(sq == ideal_of(r, {{2, 0}, {1, 1}, {0, 2}}));
    CHECK(power(a, 3).generator_count() == 4);
}

TEST_CASE("Alexander duality: dual of edge ideal is the cover ideal, involution") {
    std::mt19937 rng(204);
    for (int t = 0; t < 60; ++t) {
        Graph g = testutil::random_graph(rng, 2, 7);
        MonomialIdeal ei = edge_ideal(g);
        CHECK(alexander_dual(ei) == cover_ideal(g));
        CHECK(alexander_dual(alexander_dual(ei)) == ei);
        MonomialIdeal sf = testutil::random_squarefree_ideal(rng, 5, 4);
        if (!sf.is_zero()) CHECK(alexander_dual(alexander_dual(sf)) == sf);
    }
}

TEST_CASE("cover ideal generators are exactly the minimal vertex covers") {
    std::mt19937 rng(205);
    for (int t = 0; t < 40; ++t) {
        Graph g = testutil::random_graph(rng, 1, 8);
        MonomialIdeal j = cover_ideal(g);
        auto covers = minimal_vertex_covers(g);
        if (g.edge_count() == 0) {
            CHECK(j.is_unit()); // empty cover
            continue;
        }
        REQUIRE(j.generator_count() == covers.size());
        for (const auto& m : j.generators()) {
            CHECK(m.is_squarefree());
            std::uint64_t mask = testutil::mask_of(m.support(g.vertex_count()));
            bool found = false;
            for (const auto& c : covers) found = found || testutil::mask_of(c) == mask;
            CHECK(found);
        }
    }
}

TEST_CASE("symbolic powers: k = 1 is the cover ideal, membership via edge primes") {
    std::mt19937 rng(206);
    for (int t = 0; t < 30; ++t) {
        Graph g = testutil::random_graph(rng, 2, 6);
        if (g.edge_count() == 0) continue;
        CHECK(symbolic_power_cover(g, 1) == cover_ideal(g));
        MonomialIdeal s2 = symbolic_power_cover(g, 2);
        std::size_t n = g.vertex_count();
        for (int q = 0; q < 20; ++q) {
            Monomial m = testutil::random_monomial(rng, n, 3);
            bool in_all = true; // m in (x_a, x_b)^2 iff e_a + e_b >= 2
            for (const auto& [a, b] : g.edges())
                in_all = in_all && (m.exponent(a) + m.exponent(b) >= 2);
            CHECK(s2.contains(m) == in_all);
        }
        CHECK_THROWS_AS(symbolic_power_cover(g, 0), domain_error);
    }
}

TEST_CASE("polarization: squarefree, degree-preserving, depolarizable") {
    std::mt19937 rng(207);
    for (int t = 0; t < 60; ++t) {
        std::size_t n = 2 + rng() % 3;
        MonomialIdeal a = testutil::random_ideal(rng, n, 4);
        if (a.is_zero()) continue;
        Polarization pol = polarize(a);
        CHECK(pol.ideal.is_squarefree());
        REQUIRE(pol.ideal.generator_count() == a.generator_count());
        REQUIRE(pol.var_map.size() == pol.ideal.ring().size());
        // Substituting x_<p> -> x recovers each generator exactly.
        for (std::size_t gi = 0; gi < a.generator_count(); ++gi) {
            const Monomial& pm = pol.ideal.generators()[gi];
            std::vector<std::uint32_t> back(n, 0);
            for (std::size_t v = 0; v < pol.var_map.size(); ++v)
                back[pol.var_map[v].first] += pm.exponent(v);
            CHECK(Monomial(back) == a.generators()[gi]);
        }
    }
}

TEST_CASE("truncation generates exactly the degree->=d membership") {
    std::mt19937 rng(208);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 2 + rng() % 2;
        MonomialIdeal a = testutil::random_ideal(rng, n, 4, 2);
        if (a.is_zero()) continue;
        std::uint64_t d = deg_max(a);
        MonomialIdeal tr = truncation(a, d);
        for (const auto& m : tr.generators()) CHECK(m.degree() == d);
        for (int q = 0; q < 25; ++q) {
            Monomial m = testutil::random_monomial(rng, n, 5);
            bool expected = m.degree() >= d && a.contains(m);
            CHECK(tr.contains(m) == expected);
        }
    }
}

TEST_CASE("rendering and edge cases") {
    Ring r({"x1", "x2", "x3"});
    MonomialIdeal a = ideal_of(r, {{2, 0, 1}, {0, 1, 0}});
    CHECK(render_ideal(a) == "(x2, x1^2*x3)");
    CHECK(render_ideal(MonomialIdeal::zero(r)) == "(0)");
    CHECK(render_ideal(MonomialIdeal::unit(r)) == "(1)");
    CHECK_THROWS_AS(deg_max(MonomialIdeal::zero(r)), domain_error);
    CHECK_THROWS_AS(Ring({"x", "x"}), domain_error);
    // embed: into a larger ring by variable name
    Ring big({"y", "x1", "x2", "x3"});
    MonomialIdeal e = embed(a, big);
    CHECK(e.ring() == big);
    CHECK(render_ideal(e) == "(x2, x1^2*x3)");
}
