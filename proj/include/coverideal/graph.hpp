#ifndef COVERIDEAL_GRAPH_HPP
#define COVERIDEAL_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coverideal/vertex_set.hpp"

namespace cvi {

/// Finite simple undirected graph on labeled vertices.
///
/// Adjacency is stored as one VertexSet per vertex and is kept symmetric
/// and irreflexive. Immutable after construction.
class Graph {
public:
    Graph() = default;

    /// Vertices only; edges added through from_edges.
    explicit Graph(std::vector<std::string> labels);

    static Graph from_edges(std::vector<std::string> labels,
                            const std::vector<std::pair<std::size_t, std::size_t>>& edges);

    static Graph from_labeled_edges(std::vector<std::string> labels,
                                    const std::vector<std::pair<std::string, std::string>>& edges);

    std::size_t vertex_count() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t v) const { return labels_.at(v); }

    std::size_t index_of(const std::string& label) const;
    std::optional<std::size_t> find(const std::string& label) const;

    const VertexSet& adjacency(std::size_t v) const;
    bool has_edge(std::size_t a, std::size_t b) const;
    std::size_t degree(std::size_t v) const { return adjacency(v).count(); }

    /// Edges as index pairs (a < b), ascending.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;
    std::size_t edge_count() const;

    VertexSet empty_set() const { return VertexSet(vertex_count()); }
    VertexSet full_set() const { return VertexSet::full(vertex_count()); }

    bool operator==(const Graph& o) const;

private:
    void add_edge(std::size_t a, std::size_t b);
    void build_index();

    std::vector<std::string> labels_;
    std::vector<VertexSet> adj_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// Open neighborhood N_G(s): union of adjacencies over s (may meet s).
VertexSet neighbors(const Graph& g, const VertexSet& s);
VertexSet neighbors(const Graph& g, std::size_t v);

/// Closed neighborhood N_G[s] = N_G(s) ∪ s.
VertexSet closed_neighbors(const Graph& g, const VertexSet& s);
VertexSet closed_neighbors(const Graph& g, std::size_t v);

/// Induced subgraph on V(g) \ u; labels preserved.
Graph induced_delete(const Graph& g, const VertexSet& u);

/// Induced subgraph on the vertex set `keep`.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

bool is_independent(const Graph& g, const VertexSet& x);
bool is_clique(const Graph& g, const VertexSet& u);

/// True iff N_G(v) is a clique; degree <= 1 vertices are simplicial.
bool is_simplicial(const Graph& g, std::size_t v);

/// All inclusion-maximal independent sets, ascending bitmask order.
/// Throws domain_error if the count would exceed `cap`.
std::vector<VertexSet> maximal_independent_sets(const Graph& g, std::size_t cap = 1u << 22);

/// Complements of the maximal independent sets, ascending bitmask order.
std::vector<VertexSet> minimal_vertex_covers(const Graph& g, std::size_t cap = 1u << 22);

/// Shedding vertex test: every maximal independent set of G\v meets
/// N_G(v). Isolated vertices are never shedding.
bool is_shedding(const Graph& g, std::size_t v);

/// Maximum matching size, exhaustive (edge count capped).
std::size_t matching_number(const Graph& g, std::size_t max_edges = 24);

/// Maximum induced matching size, exhaustive (edge count capped).
std::size_t induced_matching_number(const Graph& g, std::size_t max_edges = 24);

/// nu(G) == ma(G).
bool is_cameron_walker(const Graph& g, std::size_t max_edges = 24);

std::vector<VertexSet> connected_component_masks(const Graph& g);
std::vector<Graph> connected_components(const Graph& g);

/// Disjoint union. Labels are kept when globally distinct; otherwise each
/// part's labels are prefixed "u<i>."; a collision surviving that is an error.
Graph disjoint_union(const std::vector<Graph>& gs);

/// Edge-preserving bijection g -> h, or nullopt. Backtracking with degree
/// pruning; capped at 16 vertices.
std::optional<std::vector<std::size_t>> graph_isomorphic(const Graph& g, const Graph& h,
                                                         std::size_t max_vertices = 16);

} // namespace cvi

#endif
