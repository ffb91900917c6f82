#include "coverideal/homological.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_map>

namespace cvi {

namespace {

using Clock = std::chrono::steady_clock;

struct VDSearch {
    const Graph& g;
    Budget budget;
    Clock::time_point start;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;
    std::unordered_map<VertexSet, bool, VertexSetHash> memo;
    // Chosen shedding vertex (global index) per certified connected mask.
    std::unordered_map<VertexSet, std::size_t, VertexSetHash> choice;

    VDSearch(const Graph& graph, const Budget& b) : g(graph), budget(b), start(Clock::now()) {}

    bool spent() {
        ++nodes;
        if (nodes > budget.max_nodes) return out_of_budget = true;
        if ((nodes & 255) == 0) {
            double secs = std::chrono::duration<double>(Clock::now() - start).count();
            if (secs > budget.max_seconds) return out_of_budget = true;
        }
        return false;
    }

    bool edgeless(const VertexSet& mask) const {
        bool found = false;
        mask.for_each([&](std::size_t v) {
            if (!found && g.adjacency(v).intersects(mask)) found = true;
        });
        return !found;
    }

    /// Component masks of the induced subgraph, in global coordinates.
    std::vector<VertexSet> components(const VertexSet& mask) const {
        std::vector<VertexSet> out;
        VertexSet left = mask;
        while (!left.empty()) {
            std::size_t seed = left.indices().front();
            VertexSet comp = VertexSet::single(mask.universe(), seed);
            for (;;) {
                VertexSet grown = comp | (neighbors(g, comp) & mask);
                if (grown == comp) break;
                comp = grown;
            }
            out.push_back(comp);
            left = left.minus(comp);
        }
        return out;
    }

    bool solve(const VertexSet& mask) {
        if (spent()) return false;
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        if (edgeless(mask)) {
            memo.emplace(mask, true);
            return true;
        }
        auto comps = components(mask);
        if (comps.size() > 1) {
            // A disjoint union is decomposable iff each part is; the
            // certificate is reassembled over the whole mask afterwards.
            bool ok = true;
            for (const auto& c : comps) {
                if (!solve(c)) ok = false;
                if (out_of_budget) return false;
                if (!ok) break;
            }
            memo.emplace(mask, ok);
            return ok;
        }
        Graph sub = induced_subgraph(g, mask);
        auto globals = mask.indices();
        for (std::size_t local = 0; local < globals.size(); ++local) {
            if (!is_shedding(sub, local)) continue;
            std::size_t v = globals[local];
            VertexSet minus_v = mask;
            minus_v.reset(v);
            VertexSet minus_closed = mask.minus(closed_neighbors(g, v));
            if (solve(minus_v) && solve(minus_closed)) {
                choice.emplace(mask, v);
                memo.emplace(mask, true);
                return true;
            }
            if (out_of_budget) return false;
        }
        memo.emplace(mask, false); // exhaustive: a genuine refutation
        return false;
    }
};

struct VDBuilder {
    const Graph& g;
    VDSearch& search;
    VDCertificate& cert;
    std::unordered_map<VertexSet, int, VertexSetHash> index_of;

    int build(const VertexSet& mask) {
        auto it = index_of.find(mask);
        if (it != index_of.end()) return it->second;
        int idx = static_cast<int>(cert.nodes.size());
        cert.nodes.emplace_back();
        index_of.emplace(mask, idx);
        {
            std::vector<std::string> labels;
            mask.for_each([&](std::size_t v) { labels.push_back(g.label(v)); });
            cert.nodes[static_cast<std::size_t>(idx)].vertices = std::move(labels);
        }
        if (search.edgeless(mask)) return idx;
        // Shedding choice of the first non-edgeless component; shedding
        // vertices lift across disjoint unions.
        std::size_t v = 0;
        for (const auto& c : search.components(mask)) {
            if (search.edgeless(c)) continue;
            v = search.choice.at(c);
            break;
        }
        VertexSet minus_v = mask;
        minus_v.reset(v);
        VertexSet minus_closed = mask.minus(closed_neighbors(g, v));
        int a = build(minus_v);
        int b = build(minus_closed);
        auto& node = cert.nodes[static_cast<std::size_t>(idx)];
        node.shedding = g.label(v);
        node.child_minus_vertex = a;
        node.child_minus_closed = b;
        return idx;
    }
};

} // namespace

VDCertificate is_vertex_decomposable(const Graph& g, const Budget& budget) {
    VDCertificate cert;
    VDSearch search(g, budget);
    bool ok = search.solve(g.full_set());
    cert.nodes_explored = search.nodes;
    if (search.out_of_budget) {
        cert.outcome = Outcome::budget_exceeded;
        return cert;
    }
    if (!ok) {
        cert.outcome = Outcome::refuted;
        return cert;
    }
    cert.outcome = Outcome::certified;
    VDBuilder builder{g, search, cert, {}};
    builder.build(g.full_set());
    return cert;
}

bool validate_vd_certificate(const Graph& g, const VDCertificate& cert) {
    if (cert.outcome != Outcome::certified || cert.nodes.empty()) return false;
    auto sorted = [](std::vector<std::string> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    if (sorted(cert.nodes[0].vertices) != sorted(g.labels())) return false;
    for (const auto& node : cert.nodes) {
        VertexSet mask = g.empty_set();
        for (const auto& l : node.vertices) {
            auto idx = g.find(l);
            if (!idx) return false;
            if (mask.test(*idx)) return false; // duplicate label
            mask.set(*idx);
        }
        Graph sub = induced_subgraph(g, mask);
        if (node.shedding.empty()) {
            if (node.child_minus_vertex != -1 || node.child_minus_closed != -1) return false;
            if (sub.edge_count() != 0) return false;
            continue;
        }
        auto local = sub.find(node.shedding);
        if (!local || !is_shedding(sub, *local)) return false;
        if (node.child_minus_vertex < 0 || node.child_minus_closed < 0) return false;
        if (node.child_minus_vertex >= static_cast<int>(cert.nodes.size()) ||
            node.child_minus_closed >= static_cast<int>(cert.nodes.size()))
            return false;
        std::size_t v = g.index_of(node.shedding);
        VertexSet minus_v = mask;
        minus_v.reset(v);
        VertexSet minus_closed = mask.minus(closed_neighbors(g, v));
        auto labels_of = [&](const VertexSet& m) {
            std::vector<std::string> out;
            m.for_each([&](std::size_t x) { out.push_back(g.label(x)); });
            return out;
        };
        const auto& c1 = cert.nodes[static_cast<std::size_t>(node.child_minus_vertex)];
        const auto& c2 = cert.nodes[static_cast<std::size_t>(node.child_minus_closed)];
        // Children are strict subsets, so the DAG cannot cycle.
        if (sorted(c1.vertices) != sorted(labels_of(minus_v))) return false;
        if (sorted(c2.vertices) != sorted(labels_of(minus_closed))) return false;
    }
    return true;
}

} // namespace cvi
