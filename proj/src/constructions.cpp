#include "coverideal/constructions.hpp"

#include <algorithm>
#include <unordered_set>

namespace cvi {

Graph add_whiskers(const Graph& g, const VertexSet& s) {
    std::vector<std::string> labels = g.labels();
    std::vector<std::pair<std::string, std::string>> edges;
    for (auto [a, b] : g.edges()) edges.emplace_back(g.label(a), g.label(b));
    std::unordered_set<std::string> existing(labels.begin(), labels.end());
    s.for_each([&](std::size_t v) {
        std::string z = "z_" + g.label(v);
        if (existing.count(z)) throw domain_error("whisker label collision: " + z);
        labels.push_back(z);
        edges.emplace_back(g.label(v), z);
    });
    return Graph::from_labeled_edges(std::move(labels), edges);
}

Graph clique_whisker(const Graph& g, const CliquePartition& pi) {
    VertexSet seen(g.vertex_count());
    for (const auto& part : pi.parts) {
        if (part.intersects(seen)) throw domain_error("clique partition parts overlap");
        if (!is_clique(g, part)) throw domain_error("clique partition part is not a clique");
        seen |= part;
    }
    if (seen != g.full_set()) throw domain_error("clique partition does not cover V(G)");

    std::vector<std::string> labels = g.labels();
    std::vector<std::pair<std::string, std::string>> edges;
    for (auto [a, b] : g.edges()) edges.emplace_back(g.label(a), g.label(b));
    std::unordered_set<std::string> existing(labels.begin(), labels.end());
    for (std::size_t i = 0; i < pi.parts.size(); ++i) {
        std::string w = "w" + std::to_string(i + 1);
        if (existing.count(w)) throw domain_error("whisker label collision: " + w);
        existing.insert(w);
        labels.push_back(w);
        pi.parts[i].for_each([&](std::size_t v) { edges.emplace_back(g.label(v), w); });
    }
    return Graph::from_labeled_edges(std::move(labels), edges);
}

bool is_pure(const StarCompleteSpec& spec) {
    return std::all_of(spec.sizes.begin(), spec.sizes.end(), [](int m) { return m >= 3; });
}

Graph star_complete(const StarCompleteSpec& spec) {
    if (spec.sizes.empty()) throw domain_error("star complete needs at least one clique");
    std::vector<std::string> labels{spec.center};
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 0; i < spec.sizes.size(); ++i) {
        int m = spec.sizes[i];
        if (m < 2) throw domain_error("star complete clique size must be >= 2");
        std::vector<std::string> clique{spec.center};
        for (int j = 1; j < m; ++j) {
            std::string l = spec.center + "_c" + std::to_string(i + 1) + "_" + std::to_string(j);
            labels.push_back(l);
            clique.push_back(l);
        }
        for (std::size_t a = 0; a < clique.size(); ++a)
            for (std::size_t b = a + 1; b < clique.size(); ++b) edges.emplace_back(clique[a], clique[b]);
    }
    return Graph::from_labeled_edges(std::move(labels), edges);
}

Graph attach(const AttachmentSpec& spec) {
    std::vector<std::string> labels = spec.host.labels();
    std::vector<std::pair<std::string, std::string>> edges;
    for (auto [a, b] : spec.host.edges()) edges.emplace_back(spec.host.label(a), spec.host.label(b));
    std::unordered_set<std::string> keys;
    for (const auto& [at, sizes] : spec.attachments) {
        spec.host.index_of(at); // validates
        if (!keys.insert(at).second) throw domain_error("duplicate attachment vertex: " + at);
        Graph star = star_complete({at, sizes});
        for (const auto& l : star.labels())
            if (l != at) labels.push_back(l);
        for (auto [a, b] : star.edges()) edges.emplace_back(star.label(a), star.label(b));
    }
    return Graph::from_labeled_edges(std::move(labels), edges);
}

Graph companion_graph(const Graph& g, int k) {
    if (k < 0) throw domain_error("companion graph needs k >= 0");
    std::size_t n = g.vertex_count();
    std::vector<std::string> labels;
    labels.reserve(n * static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < n; ++i)
        for (int p = 1; p <= k; ++p) labels.push_back(g.label(i) + "_" + std::to_string(p));
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (auto [i, j] : g.edges())
        for (int p = 1; p <= k; ++p)
            for (int q = 1; q <= k; ++q)
                if (p + q <= k + 1)
                    edges.emplace_back(i * k + (p - 1), j * k + (q - 1));
    return Graph::from_edges(std::move(labels), edges);
}

Graph cameron_walker_graph(const CameronWalkerSpec& spec) {
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> edges = spec.edges;
    for (const auto& v : spec.a) labels.push_back(v);
    for (const auto& v : spec.b) labels.push_back(v);
    for (const auto& v : spec.a) {
        auto it = spec.leaves.find(v);
        int cnt = it == spec.leaves.end() ? 0 : it->second;
        if (cnt < 1) throw domain_error("every bipartition-A vertex needs at least one leaf: " + v);
        for (int j = 1; j <= cnt; ++j) {
            std::string l = v + "_l" + std::to_string(j);
            labels.push_back(l);
            edges.emplace_back(v, l);
        }
    }
    for (const auto& [v, cnt] : spec.triangles) {
        if (cnt < 0) throw domain_error("negative triangle count");
        for (int j = 1; j <= cnt; ++j) {
            std::string t1 = v + "_t" + std::to_string(j) + "a";
            std::string t2 = v + "_t" + std::to_string(j) + "b";
            labels.push_back(t1);
            labels.push_back(t2);
            edges.emplace_back(v, t1);
            edges.emplace_back(v, t2);
            edges.emplace_back(t1, t2);
        }
    }
    Graph g = Graph::from_labeled_edges(std::move(labels), edges);
    // bipartite base + triangle keys must be actual base vertices
    for (const auto& [v, cnt] : spec.triangles) {
        (void)cnt;
        if (std::find(spec.b.begin(), spec.b.end(), v) == spec.b.end())
            throw domain_error("pendant triangles only attach to bipartition-B vertices: " + v);
    }
    if (!is_cameron_walker(g)) throw domain_error("generated graph fails nu = ma validation");
    return g;
}

CliquePartition clique_partition_from_labels(const Graph& g,
                                             const std::vector<std::vector<std::string>>& parts) {
    CliquePartition pi;
    VertexSet seen(g.vertex_count());
    for (const auto& part : parts) {
        VertexSet s(g.vertex_count());
        for (const auto& l : part) s.set(g.index_of(l));
        if (s.intersects(seen)) throw domain_error("clique partition parts must be disjoint");
        if (!is_clique(g, s)) throw domain_error("clique partition part is not a clique");
        seen |= s;
        pi.parts.push_back(s);
    }
    if (seen != g.full_set()) throw domain_error("clique partition must cover every vertex");
    return pi;
}

} // namespace cvi
