// Shared helpers for the test suites: random instance generators and small
// brute-force oracles implemented independently of the library internals.
#ifndef COVERIDEAL_TEST_UTIL_HPP
#define COVERIDEAL_TEST_UTIL_HPP

#include <random>
#include <set>
#include <string>
#include <vector>

#include "coverideal/graph.hpp"
#include "coverideal/monomial_ideal.hpp"

namespace testutil {

inline cvi::Graph random_graph(std::mt19937& rng, int nmin, int nmax, double edge_p = 0.4) {
    std::uniform_int_distribution<int> nd(nmin, nmax);
    int n = nd(rng);
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
    std::bernoulli_distribution ed(edge_p);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (ed(rng)) edges.emplace_back(a, b);
    return cvi::Graph::from_edges(std::move(labels), edges);
}

inline cvi::Monomial random_monomial(std::mt19937& rng, std::size_t nvars, unsigned max_exp = 3) {
    std::uniform_int_distribution<unsigned> ed(0, max_exp);
    std::vector<std::uint32_t> e(nvars);
    for (auto& x : e) x = ed(rng);
    return cvi::Monomial(std::move(e));
}

inline cvi::Ring small_ring(std::size_t nvars) {
    std::vector<std::string> vars;
    for (std::size_t i = 1; i <= nvars; ++i) vars.push_back("x" + std::to_string(i));
    return cvi::Ring(std::move(vars));
}

inline cvi::MonomialIdeal random_ideal(std::mt19937& rng, std::size_t nvars, std::size_t ngens,
                                       unsigned max_exp = 3) {
    std::vector<cvi::Monomial> gens;
    for (std::size_t i = 0; i < ngens; ++i) {
        cvi::Monomial m = random_monomial(rng, nvars, max_exp);
        if (!m.is_one()) gens.push_back(m);
    }
    return cvi::MonomialIdeal::make(small_ring(nvars), std::move(gens));
}

inline cvi::MonomialIdeal random_squarefree_ideal(std::mt19937& rng, std::size_t nvars,
                                                  std::size_t ngens) {
    return random_ideal(rng, nvars, ngens, 1);
}

/// Exhaustive maximal-independent-set enumeration over all vertex subsets.
inline std::set<std::uint64_t> brute_force_mis(const cvi::Graph& g) {
    std::size_t n = g.vertex_count();
    auto independent = [&](std::uint64_t m) {
        for (const auto& [a, b] : g.edges())
            if ((m >> a & 1) && (m >> b & 1)) return false;
        return true;
    };
    std::set<std::uint64_t> out;
    for (std::uint64_t m = 0; m < (1ull << n); ++m) {
        if (!independent(m)) continue;
        bool maximal = true;
        for (std::size_t v = 0; v < n && maximal; ++v)
            if (!(m >> v & 1) && independent(m | (1ull << v))) maximal = false;
        if (maximal) out.insert(m);
    }
    return out;
}

/// Literal shedding-vertex definition: no independent set of G \ N[v] is a
/// maximal independent set of G \ v.
inline bool brute_force_shedding(const cvi::Graph& g, std::size_t v) {
    std::size_t n = g.vertex_count();
    auto independent = [&](std::uint64_t m) {
        for (const auto& [a, b] : g.edges())
            if ((m >> a & 1) && (m >> b & 1)) return false;
        return true;
    };
    std::uint64_t closed = 1ull << v;
    g.adjacency(v).for_each([&](std::size_t u) { closed |= 1ull << u; });
    std::uint64_t minus_v = ((1ull << n) - 1) & ~(1ull << v);
    for (std::uint64_t m = 0; m < (1ull << n); ++m) {
        if (m & closed) continue;       // not inside G \ N[v]
        if (!independent(m)) continue;  // not independent
        bool maximal_in_minus_v = true; // maximal as a subset of G \ v?
        for (std::size_t u = 0; u < n && maximal_in_minus_v; ++u)
            if ((minus_v >> u & 1) && !(m >> u & 1) && independent(m | (1ull << u)))
                maximal_in_minus_v = false;
        if (maximal_in_minus_v) return false;
    }
    return true;
}

inline std::uint64_t mask_of(const cvi::VertexSet& s) { return s.low_word(); }

} // namespace testutil

#endif
