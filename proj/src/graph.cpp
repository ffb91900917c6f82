#include "coverideal/graph.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

namespace cvi {

Graph::Graph(std::vector<std::string> labels) : labels_(std::move(labels)) {
    adj_.assign(labels_.size(), VertexSet(labels_.size()));
    build_index();
}

void Graph::build_index() {
    index_.clear();
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (!index_.emplace(labels_[i], i).second)
            throw domain_error("duplicate vertex label: " + labels_[i]);
    }
}

Graph Graph::from_edges(std::vector<std::string> labels,
                        const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    Graph g(std::move(labels));
    for (auto [a, b] : edges) g.add_edge(a, b);
    return g;
}

Graph Graph::from_labeled_edges(std::vector<std::string> labels,
                                const std::vector<std::pair<std::string, std::string>>& edges) {
    Graph g(std::move(labels));
    for (const auto& [a, b] : edges) g.add_edge(g.index_of(a), g.index_of(b));
    return g;
}

void Graph::add_edge(std::size_t a, std::size_t b) {
    if (a >= vertex_count() || b >= vertex_count()) throw domain_error("edge endpoint out of range");
    if (a == b) throw domain_error("loop edge on vertex " + labels_[a]);
    adj_[a].set(b);
    adj_[b].set(a);
}

std::size_t Graph::index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw domain_error("unknown vertex label: " + label);
    return it->second;
}

std::optional<std::size_t> Graph::find(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

const VertexSet& Graph::adjacency(std::size_t v) const {
    if (v >= vertex_count()) throw domain_error("vertex index out of range");
    return adj_[v];
}

bool Graph::has_edge(std::size_t a, std::size_t b) const { return adjacency(a).test(b); }

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < vertex_count(); ++a)
        adj_[a].for_each([&](std::size_t b) {
            if (a < b) out.emplace_back(a, b);
        });
    return out;
}

std::size_t Graph::edge_count() const { return edges().size(); }

bool Graph::operator==(const Graph& o) const { return labels_ == o.labels_ && adj_ == o.adj_; }

VertexSet neighbors(const Graph& g, const VertexSet& s) {
    VertexSet out(g.vertex_count());
    s.for_each([&](std::size_t v) { out |= g.adjacency(v); });
    return out;
}

VertexSet neighbors(const Graph& g, std::size_t v) { return g.adjacency(v); }

VertexSet closed_neighbors(const Graph& g, const VertexSet& s) { return neighbors(g, s) | s; }

VertexSet closed_neighbors(const Graph& g, std::size_t v) {
    return g.adjacency(v) | VertexSet::single(g.vertex_count(), v);
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
    std::vector<std::size_t> verts = keep.indices();
    std::vector<std::string> labels;
    labels.reserve(verts.size());
    for (auto v : verts) labels.push_back(g.label(v));
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.has_edge(verts[i], verts[j])) edges.emplace_back(i, j);
    return Graph::from_edges(std::move(labels), edges);
}

Graph induced_delete(const Graph& g, const VertexSet& u) {
    return induced_subgraph(g, g.full_set().minus(u));
}

bool is_independent(const Graph& g, const VertexSet& x) {
    bool ok = true;
    x.for_each([&](std::size_t v) {
        if (g.adjacency(v).intersects(x)) ok = false;
    });
    return ok;
}

bool is_clique(const Graph& g, const VertexSet& u) {
    bool ok = true;
    u.for_each([&](std::size_t v) {
        VertexSet rest = u.minus(VertexSet::single(g.vertex_count(), v));
        if (!rest.subset_of(g.adjacency(v))) ok = false;
    });
    return ok;
}

bool is_simplicial(const Graph& g, std::size_t v) { return is_clique(g, g.adjacency(v)); }

namespace {

// Bron-Kerbosch with pivoting for maximal independent sets: maximal cliques
// in the complement adjacency.
void bk_independent(const Graph& g, const std::vector<VertexSet>& non_adj, VertexSet r, VertexSet p,
                    VertexSet x, std::vector<VertexSet>& out, std::size_t cap) {
    if (p.empty() && x.empty()) {
        if (out.size() >= cap) throw domain_error("maximal independent set enumeration cap exceeded");
        out.push_back(r);
        return;
    }
    // pivot: vertex of p|x maximizing |p & non_adj(u)|
    std::size_t pivot = 0, best = 0;
    bool have = false;
    (p | x).for_each([&](std::size_t u) {
        std::size_t c = (p & non_adj[u]).count();
        if (!have || c > best) {
            have = true;
            best = c;
            pivot = u;
        }
    });
    VertexSet cands = p.minus(non_adj[pivot]);
    cands.for_each([&](std::size_t v) {
        VertexSet sv = VertexSet::single(g.vertex_count(), v);
        bk_independent(g, non_adj, r | sv, p & non_adj[v], x & non_adj[v], out, cap);
        p = p.minus(sv);
        x |= sv;
    });
}

} // namespace

std::vector<VertexSet> maximal_independent_sets(const Graph& g, std::size_t cap) {
    std::size_t n = g.vertex_count();
    std::vector<VertexSet> non_adj;
    non_adj.reserve(n);
    for (std::size_t v = 0; v < n; ++v)
        non_adj.push_back(g.adjacency(v).complement().minus(VertexSet::single(n, v)));
    std::vector<VertexSet> out;
    bk_independent(g, non_adj, VertexSet(n), VertexSet::full(n), VertexSet(n), out, cap);
    std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) { return a.mask_less(b); });
    return out;
}

std::vector<VertexSet> minimal_vertex_covers(const Graph& g, std::size_t cap) {
    std::vector<VertexSet> out;
    for (const auto& m : maximal_independent_sets(g, cap)) out.push_back(m.complement());
    std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) { return a.mask_less(b); });
    return out;
}

bool is_shedding(const Graph& g, std::size_t v) {
    VertexSet nv = neighbors(g, v);
    // An isolated vertex is never shedding: every maximal independent set
    // of G \ v lies in G \ N[v] and misses the empty neighborhood.
    if (nv.empty()) return false;
    Graph del = induced_delete(g, VertexSet::single(g.vertex_count(), v));
    // translate N(v) into del's indexing
    VertexSet nv_del(del.vertex_count());
    nv.for_each([&](std::size_t u) { nv_del.set(del.index_of(g.label(u))); });
    for (const auto& m : maximal_independent_sets(del))
        if (!m.intersects(nv_del)) return false;
    return true;
}

namespace {

std::size_t matching_rec(const std::vector<std::pair<std::size_t, std::size_t>>& es, std::size_t i,
                         VertexSet used, std::size_t universe) {
    if (i == es.size()) return 0;
    std::size_t best = matching_rec(es, i + 1, used, universe);
    auto [a, b] = es[i];
    if (!used.test(a) && !used.test(b)) {
        VertexSet u2 = used;
        u2.set(a);
        u2.set(b);
        best = std::max(best, 1 + matching_rec(es, i + 1, u2, universe));
    }
    return best;
}

std::size_t induced_matching_rec(const Graph& g, const std::vector<std::pair<std::size_t, std::size_t>>& es,
                                 std::size_t i, VertexSet forbidden) {
    if (i == es.size()) return 0;
    std::size_t best = induced_matching_rec(g, es, i + 1, forbidden);
    auto [a, b] = es[i];
    if (!forbidden.test(a) && !forbidden.test(b)) {
        VertexSet f2 = forbidden | closed_neighbors(g, a) | closed_neighbors(g, b);
        best = std::max(best, 1 + induced_matching_rec(g, es, i + 1, f2));
    }
    return best;
}

} // namespace

std::size_t matching_number(const Graph& g, std::size_t max_edges) {
    auto es = g.edges();
    if (es.size() > max_edges) throw domain_error("graph too large for exhaustive matching search");
    return matching_rec(es, 0, g.empty_set(), g.vertex_count());
}

std::size_t induced_matching_number(const Graph& g, std::size_t max_edges) {
    auto es = g.edges();
    if (es.size() > max_edges) throw domain_error("graph too large for exhaustive matching search");
    return induced_matching_rec(g, es, 0, g.empty_set());
}

bool is_cameron_walker(const Graph& g, std::size_t max_edges) {
    return matching_number(g, max_edges) == induced_matching_number(g, max_edges);
}

std::vector<VertexSet> connected_component_masks(const Graph& g) {
    std::size_t n = g.vertex_count();
    VertexSet seen(n);
    std::vector<VertexSet> out;
    for (std::size_t v = 0; v < n; ++v) {
        if (seen.test(v)) continue;
        VertexSet comp(n);
        std::vector<std::size_t> stack{v};
        while (!stack.empty()) {
            std::size_t u = stack.back();
            stack.pop_back();
            if (comp.test(u)) continue;
            comp.set(u);
            g.adjacency(u).minus(comp).for_each([&](std::size_t w) { stack.push_back(w); });
        }
        seen |= comp;
        out.push_back(comp);
    }
    return out;
}

std::vector<Graph> connected_components(const Graph& g) {
    std::vector<Graph> out;
    for (const auto& m : connected_component_masks(g)) out.push_back(induced_subgraph(g, m));
    return out;
}

Graph disjoint_union(const std::vector<Graph>& gs) {
    std::unordered_set<std::string> all;
    bool collide = false;
    for (const auto& g : gs)
        for (const auto& l : g.labels())
            if (!all.insert(l).second) collide = true;

    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> edges;
    std::unordered_set<std::string> used;
    for (std::size_t i = 0; i < gs.size(); ++i) {
        const Graph& g = gs[i];
        auto rename = [&](const std::string& l) {
            return collide ? "u" + std::to_string(i + 1) + "." + l : l;
        };
        for (const auto& l : g.labels()) {
            std::string nl = rename(l);
            if (!used.insert(nl).second) throw domain_error("label collision in disjoint union: " + nl);
            labels.push_back(nl);
        }
        for (auto [a, b] : g.edges()) edges.emplace_back(rename(g.label(a)), rename(g.label(b)));
    }
    return Graph::from_labeled_edges(std::move(labels), edges);
}

namespace {

bool iso_rec(const Graph& g, const Graph& h, std::vector<std::size_t>& map, VertexSet used,
             std::size_t v) {
    std::size_t n = g.vertex_count();
    if (v == n) return true;
    for (std::size_t w = 0; w < n; ++w) {
        if (used.test(w)) continue;
        if (g.degree(v) != h.degree(w)) continue;
        bool ok = true;
        for (std::size_t u = 0; u < v && ok; ++u)
            if (g.has_edge(u, v) != h.has_edge(map[u], w)) ok = false;
        if (!ok) continue;
        map[v] = w;
        VertexSet used2 = used;
        used2.set(w);
        if (iso_rec(g, h, map, used2, v + 1)) return true;
    }
    return false;
}

} // namespace

std::optional<std::vector<std::size_t>> graph_isomorphic(const Graph& g, const Graph& h,
                                                         std::size_t max_vertices) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return std::nullopt;
    if (g.vertex_count() > max_vertices) throw domain_error("graph too large for isomorphism search");
    std::vector<std::size_t> degs_g, degs_h;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) degs_g.push_back(g.degree(v));
    for (std::size_t v = 0; v < h.vertex_count(); ++v) degs_h.push_back(h.degree(v));
    std::sort(degs_g.begin(), degs_g.end());
    std::sort(degs_h.begin(), degs_h.end());
    if (degs_g != degs_h) return std::nullopt;
    std::vector<std::size_t> map(g.vertex_count(), 0);
    if (iso_rec(g, h, map, VertexSet(g.vertex_count()), 0)) return map;
    return std::nullopt;
}

} // namespace cvi
