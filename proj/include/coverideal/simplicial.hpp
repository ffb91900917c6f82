#ifndef COVERIDEAL_SIMPLICIAL_HPP
#define COVERIDEAL_SIMPLICIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "coverideal/graph.hpp"
#include "coverideal/monomial_ideal.hpp"

namespace cvi {

/// Abstract simplicial complex given by its facets on a labeled ground set.
///
/// Facets are inclusion-maximal and stored in ascending bitmask order. The
/// empty facet list is the void complex; a single empty facet is {∅}.
struct SimplicialComplex {
    std::vector<std::string> ground;
    std::vector<VertexSet> facets;

    bool is_void() const { return facets.empty(); }
    bool is_irrelevant() const { return facets.size() == 1 && facets[0].empty(); }
    /// Largest facet cardinality minus one; requires a non-void complex.
    int dimension() const;
};

/// Normalizes an arbitrary face list: keeps the maximal ones, sorted.
std::vector<VertexSet> maximal_faces(std::vector<VertexSet> faces);

/// Facets are the maximal independent sets of g.
SimplicialComplex independence_complex(const Graph& g);

/// Stanley-Reisner complex of a squarefree ideal: faces are the squarefree
/// monomials outside the ideal. Zero ideal gives the full simplex, unit
/// ideal the void complex.
SimplicialComplex stanley_reisner_complex(const MonomialIdeal& a);

/// Combinatorial Alexander dual of the Stanley-Reisner complex of a:
/// facets are the maximal complements of generator supports.
SimplicialComplex dual_complex(const MonomialIdeal& a);

/// Reduced homology ranks over F_p, p prime.
///
/// ranks[d + 1] = dim H~_d for d = -1 .. dim; empty result for the void
/// complex. Ground sets above 64 vertices are rejected (homology never
/// needs more in this library; callers restrict first).
std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplex& c, int p);

/// Mask-level kernel used by the Betti number routines. Facets need not be
/// maximal; duplicates are fine. Same return convention as above.
std::vector<std::size_t> homology_ranks(const std::vector<std::uint64_t>& facet_masks, int p);

} // namespace cvi

#endif
