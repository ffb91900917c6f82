#ifndef COVERIDEAL_CONSTRUCTIONS_HPP
#define COVERIDEAL_CONSTRUCTIONS_HPP

#include <map>
#include <string>
#include <vector>

#include "coverideal/graph.hpp"

namespace cvi {

/// Partition of V(G) into disjoint (possibly empty) cliques.
struct CliquePartition {
    std::vector<VertexSet> parts;
};

/// Complete graphs joined at one common center vertex. Each size counts the
/// clique's vertices including the center, so every size is at least 2.
struct StarCompleteSpec {
    std::string center;
    std::vector<int> sizes;
};

/// Host graph with star completes glued at selected vertices.
struct AttachmentSpec {
    Graph host;
    std::vector<std::pair<std::string, std::vector<int>>> attachments; // host vertex -> sizes
};

/// Bipartite base (A,B) with leaves on every A vertex and optional pendant
/// triangles on B vertices.
struct CameronWalkerSpec {
    std::vector<std::string> a;
    std::vector<std::string> b;
    std::vector<std::pair<std::string, std::string>> edges; // between a and b
    std::map<std::string, int> leaves;                      // per a vertex, >= 1
    std::map<std::string, int> triangles;                   // per b vertex, >= 0
};

/// Adds pendant vertex z_<x> with edge {x, z_<x>} for each x in s.
Graph add_whiskers(const Graph& g, const VertexSet& s);

/// Cook-Nagel clique whiskering: new vertex w_i joined to all of part i.
Graph clique_whisker(const Graph& g, const CliquePartition& pi);

/// The j-th non-center vertex of the i-th clique is labeled <center>_c<i>_<j>.
Graph star_complete(const StarCompleteSpec& spec);

/// Pure iff every joined clique has at least 3 vertices.
bool is_pure(const StarCompleteSpec& spec);

Graph attach(const AttachmentSpec& spec);

/// Companion graph on vertices <x>_<p>, 1 <= p <= k, vertex-major order;
/// edges {x_{i,p}, x_{j,q}} for edges {x_i,x_j} with p+q <= k+1.
/// k = 0 yields the empty graph.
Graph companion_graph(const Graph& g, int k);

/// Generates the bipartite-with-leaves family member and validates that the
/// output satisfies nu = ma.
Graph cameron_walker_graph(const CameronWalkerSpec& spec);

/// Parses a CliquePartition from label lists and validates it against g.
CliquePartition clique_partition_from_labels(const Graph& g,
                                             const std::vector<std::vector<std::string>>& parts);

} // namespace cvi

#endif
