#include "coverideal/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "coverideal/constructions.hpp"
#include "coverideal/io.hpp"

namespace cvi {

namespace {

using Clock = std::chrono::steady_clock;

struct Ctx {
    Budget budget;
    unsigned threads = 1;
    std::string data_dir;
    VerifySuiteResult result;

    void check(const std::string& name, bool ok, const std::string& detail = "") {
        result.checks.push_back({name, ok, detail});
    }
};

// ---- paper instances ----------------------------------------------------

// The 9-vertex counterexample graph: a triangle x1x2x3 with two pendant
// edges attached at each triangle vertex.
Graph ex412_graph() {
    return graph_from_edge_list(
        "x1 x2\nx2 x3\nx3 x1\nx1 x4\nx1 x5\nx2 x6\nx2 x7\nx3 x8\nx3 x9\n");
}

// The 8-vertex graph: a 4-cycle x1..x4 with a triangle attached at x1
// (through x5, x6) and a triangle attached at x3 (through x7, x8).
Graph ex44_graph() {
    return graph_from_edge_list(
        "x1 x2\nx2 x3\nx3 x4\nx4 x1\nx1 x5\nx1 x6\nx5 x6\nx3 x7\nx7 x8\nx3 x8\n");
}

// ---- randomized instance generators (fixed seeds per suite) -------------

Graph random_graph(std::mt19937& rng, int nmin, int nmax) {
    int n = std::uniform_int_distribution<int>(nmin, nmax)(rng);
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (std::uniform_int_distribution<int>(0, 1)(rng))
                edges.emplace_back(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
    return Graph::from_edges(std::move(labels), edges);
}

Graph random_bipartite(std::mt19937& rng, int total_max) {
    int m = std::uniform_int_distribution<int>(1, total_max - 1)(rng);
    int n = std::uniform_int_distribution<int>(1, total_max - m)(rng);
    std::vector<std::string> labels;
    for (int i = 1; i <= m; ++i) labels.push_back("x" + std::to_string(i));
    for (int i = 1; i <= n; ++i) labels.push_back("y" + std::to_string(i));
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < n; ++b)
            if (std::uniform_int_distribution<int>(0, 1)(rng))
                edges.emplace_back(static_cast<std::size_t>(a), static_cast<std::size_t>(m + b));
    return Graph::from_edges(std::move(labels), edges);
}

VertexSet random_minimal_cover(const Graph& g, std::mt19937& rng) {
    auto covers = minimal_vertex_covers(g);
    return covers[std::uniform_int_distribution<std::size_t>(0, covers.size() - 1)(rng)];
}

CliquePartition random_clique_partition(const Graph& g, std::mt19937& rng) {
    std::vector<std::size_t> order(g.vertex_count());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    CliquePartition pi;
    VertexSet used(g.vertex_count());
    for (std::size_t v : order) {
        if (used.test(v)) continue;
        VertexSet part = VertexSet::single(g.vertex_count(), v);
        used.set(v);
        for (std::size_t w : order) {
            if (used.test(w)) continue;
            VertexSet grown = part;
            grown.set(w);
            if (is_clique(g, grown) && std::uniform_int_distribution<int>(0, 2)(rng) != 0) {
                part = grown;
                used.set(w);
            }
        }
        pi.parts.push_back(part);
    }
    return pi;
}

Monomial monomial_of(const Ring& ring, const std::vector<std::string>& vars) {
    Monomial m = Monomial::one(ring.size());
    for (const auto& v : vars) m.exponent(ring.index_of(v)) = 1;
    return m;
}

std::string outcome_note(const char* what, const LinearQuotientCertificate& c) {
    return std::string(what) + ": " + outcome_to_string(c.outcome) + " after " +
           std::to_string(c.nodes_explored) + " nodes";
}

/// Shared positive check: linear quotients of polarize(J(G)^(k)) certify and
/// the certificate is independently valid.
bool lq_certifies(Ctx& ctx, const Graph& g, int k, const std::string& name,
                  bool cross_check_betti = false) {
    MonomialIdeal pol = polarize(symbolic_power_cover(g, k)).ideal;
    auto cert = linear_quotients_order(pol, ctx.budget);
    bool ok = cert.outcome == Outcome::certified && validate_linear_quotients(pol, cert);
    ctx.check(name, ok, outcome_note("lq", cert));
    if (ok && cross_check_betti) {
        for (int p : {2, 3}) {
            BettiTable ht = betti_from_linear_quotients(pol, cert, p);
            BettiTable ho = betti_table_hochster(pol, p, HochsterRoute::automatic, ctx.threads);
            ctx.check(name + "/betti-cross-p" + std::to_string(p), ht.same_entries(ho));
        }
    }
    return ok;
}

void file_matches(Ctx& ctx, const std::string& file, const Graph& constructed) {
    if (ctx.data_dir.empty()) return;
    try {
        Graph loaded = graph_from_json(parse_json(read_file(ctx.data_dir + "/" + file)));
        ctx.check("instance-file/" + file, loaded == constructed);
    } catch (const std::exception& e) {
        ctx.check("instance-file/" + file, false, e.what());
    }
}

// ---- suites --------------------------------------------------------------

// polarize(J(G)^(k)) equals the cover ideal of the companion graph under
// the shared <x>_<p> labeling, as exact labeled generator sets.
void suite_lem_2_9(Ctx& ctx) {
    std::mt19937 rng(29);
    bool all = true;
    for (int t = 0; t < 50; ++t) {
        Graph g = random_graph(rng, 1, 5);
        for (int k = 1; k <= 3; ++k) {
            Graph gk = companion_graph(g, k);
            MonomialIdeal rhs = cover_ideal(gk);
            MonomialIdeal lhs = embed(polarize(symbolic_power_cover(g, k)).ideal, rhs.ring());
            if (!(lhs == rhs)) all = false;
        }
    }
    ctx.check("random-graphs-n5-k123", all, "50 graphs x k in {1,2,3}");
    Graph g = ex412_graph();
    MonomialIdeal rhs = cover_ideal(companion_graph(g, 2));
    MonomialIdeal lhs = embed(polarize(symbolic_power_cover(g, 2)).ideal, rhs.ring());
    ctx.check("nine-vertex-instance-k2", lhs == rhs);
}

// Simplicial vertices survive into the top layer of the companion graph.
void suite_lem_3_1(Ctx& ctx) {
    std::mt19937 rng(31);
    bool all = true;
    int witnessed = 0;
    for (int t = 0; t < 40; ++t) {
        Graph g = random_graph(rng, 1, 6);
        int k = std::uniform_int_distribution<int>(1, 4)(rng);
        Graph gk = companion_graph(g, k);
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            if (!is_simplicial(g, v)) continue;
            ++witnessed;
            if (!is_simplicial(gk, gk.index_of(g.label(v) + "_" + std::to_string(k)))) all = false;
        }
    }
    ctx.check("simplicial-lifts-to-top-layer", all && witnessed > 0,
              std::to_string(witnessed) + " simplicial vertices checked");
}

void suite_lem_3_3(Ctx& ctx) {
    std::mt19937 rng(33);
    // (1) deleting all layers of U commutes with the construction, label-exactly.
    bool part1 = true;
    for (int t = 0; t < 30; ++t) {
        Graph g = random_graph(rng, 1, 5);
        int k = std::uniform_int_distribution<int>(1, 3)(rng);
        VertexSet u(g.vertex_count());
        for (std::size_t v = 0; v < g.vertex_count(); ++v)
            if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) u.set(v);
        Graph lhs = companion_graph(g, k);
        VertexSet layers(lhs.vertex_count());
        u.for_each([&](std::size_t v) {
            for (int p = 1; p <= k; ++p)
                layers.set(lhs.index_of(g.label(v) + "_" + std::to_string(p)));
        });
        if (!(induced_delete(lhs, layers) == companion_graph(induced_delete(g, u), k)))
            part1 = false;
    }
    ctx.check("delete-layers-label-exact", part1);

    // (2) removing the whole first layer drops k by two, up to isomorphism,
    // leaving the top layer isolated.
    bool part2 = true;
    for (int t = 0; t < 20; ++t) {
        Graph g = random_graph(rng, 1, 5);
        int k = std::uniform_int_distribution<int>(2, 3)(rng);
        Graph gk = companion_graph(g, k);
        VertexSet first(gk.vertex_count());
        for (std::size_t v = 0; v < g.vertex_count(); ++v) first.set(gk.index_of(g.label(v) + "_1"));
        std::vector<std::string> iso;
        for (std::size_t v = 1; v <= g.vertex_count(); ++v) iso.push_back("iso" + std::to_string(v));
        Graph rhs = disjoint_union({companion_graph(g, k - 2), Graph(iso)});
        if (!graph_isomorphic(induced_delete(gk, first), rhs)) part2 = false;
    }
    ctx.check("delete-first-layer-drops-two", part2);

    // (3) removing N[x_{j,1}] matches the companion of G minus N[x_j], plus
    // the k-1 stranded layers of x_j.
    bool part3 = true;
    for (int t = 0; t < 20; ++t) {
        Graph g = random_graph(rng, 1, 5);
        int k = std::uniform_int_distribution<int>(1, 3)(rng);
        auto j = std::uniform_int_distribution<std::size_t>(0, g.vertex_count() - 1)(rng);
        Graph gk = companion_graph(g, k);
        Graph lhs = induced_delete(gk, closed_neighbors(gk, gk.index_of(g.label(j) + "_1")));
        std::vector<std::string> iso;
        for (int p = 2; p <= k; ++p) iso.push_back("iso" + std::to_string(p));
        Graph rhs = disjoint_union(
            {companion_graph(induced_delete(g, closed_neighbors(g, j)), k), Graph(iso)});
        if (!graph_isomorphic(lhs, rhs)) part3 = false;
    }
    ctx.check("delete-closed-nbhd-of-layer-one", part3);
}

// Companion graphs of complete graphs are vertex decomposable.
void suite_thm_3_7(Ctx& ctx) {
    for (int n = 1; n <= 4; ++n) {
        json spec{{"family", "complete"}, {"n", n}};
        Graph kn = graph_from_spec(spec);
        for (int k = 1; k <= 3; ++k) {
            Graph gk = companion_graph(kn, k);
            auto cert = is_vertex_decomposable(gk, ctx.budget);
            bool ok = cert.outcome == Outcome::certified && validate_vd_certificate(gk, cert);
            ctx.check("K" + std::to_string(n) + "-k" + std::to_string(k), ok,
                      std::to_string(cert.nodes_explored) + " nodes");
        }
    }
}

// Companion graphs of star complete graphs are vertex decomposable.
void suite_thm_3_8(Ctx& ctx) {
    const std::vector<std::vector<int>> shapes{{2, 2}, {3, 3}, {2, 3}, {3, 4}};
    for (const auto& sizes : shapes) {
        Graph sc = star_complete({"x", sizes});
        std::string tag = "sizes";
        for (int s : sizes) tag += "-" + std::to_string(s);
        for (int k = 1; k <= 3; ++k) {
            Graph gk = companion_graph(sc, k);
            auto cert = is_vertex_decomposable(gk, ctx.budget);
            bool ok = cert.outcome == Outcome::certified && validate_vd_certificate(gk, cert);
            ctx.check(tag + "-k" + std::to_string(k), ok,
                      std::to_string(cert.nodes_explored) + " nodes");
        }
    }
}

// Pure star complete attachments at all but at most one host vertex.
void suite_thm_4_2(Ctx& ctx) {
    std::mt19937 rng(42);
    const std::vector<std::vector<int>> pure{{3}, {3, 3}, {4}};
    for (int t = 0; t < 6; ++t) {
        Graph h = random_graph(rng, 1, 3);
        int n = static_cast<int>(h.vertex_count());
        int q = std::max(1, n - std::uniform_int_distribution<int>(0, 1)(rng));
        AttachmentSpec spec{h, {}};
        for (int j = 0; j < q; ++j)
            spec.attachments.emplace_back(
                h.label(static_cast<std::size_t>(j)),
                pure[std::uniform_int_distribution<std::size_t>(0, pure.size() - 1)(rng)]);
        Graph g = attach(spec);
        for (int k = 1; k <= 2; ++k)
            lq_certifies(ctx, g, k,
                         "instance" + std::to_string(t) + "-k" + std::to_string(k));
    }
}

// Non-pure attachments on a vertex cover of the host (so the remaining host
// vertices form an independent set), pure attachments elsewhere.
void suite_thm_4_3(Ctx& ctx) {
    std::mt19937 rng(43);
    const std::vector<std::vector<int>> nonpure{{2}, {2, 2}, {2, 3}};
    for (int t = 0; t < 6; ++t) {
        Graph h = random_graph(rng, 2, 4);
        VertexSet cover = random_minimal_cover(h, rng);
        AttachmentSpec spec{h, {}};
        cover.for_each([&](std::size_t v) {
            spec.attachments.emplace_back(
                h.label(v),
                nonpure[std::uniform_int_distribution<std::size_t>(0, nonpure.size() - 1)(rng)]);
        });
        Graph g = attach(spec);
        for (int k = 1; k <= 2; ++k)
            lq_certifies(ctx, g, k,
                         "instance" + std::to_string(t) + "-k" + std::to_string(k));
    }
    // The nine-vertex example graph satisfies this hypothesis.
    for (int k = 1; k <= 2; ++k)
        lq_certifies(ctx, ex412_graph(), k, "nine-vertex-k" + std::to_string(k));
}

// Whiskers on a vertex cover force linear quotients of all symbolic powers.
void suite_cor_4_5(Ctx& ctx) {
    std::mt19937 rng(45);
    for (int t = 0; t < 20; ++t) {
        Graph g = random_graph(rng, 1, 5);
        Graph whiskered = add_whiskers(g, random_minimal_cover(g, rng));
        for (int k = 1; k <= 2; ++k)
            lq_certifies(ctx, whiskered, k,
                         "instance" + std::to_string(t) + "-k" + std::to_string(k), true);
    }
}

// Cameron-Walker family shapes.
void suite_cor_4_7(Ctx& ctx) {
    std::vector<std::pair<std::string, Graph>> shapes;
    shapes.emplace_back("star", star_complete({"x", {2, 2, 2}}));
    shapes.emplace_back("star-triangle", star_complete({"x", {3, 3}}));
    shapes.emplace_back("k2-leaves",
                        cameron_walker_graph({{"a1"}, {"b1"}, {{"a1", "b1"}}, {{"a1", 2}}, {}}));
    shapes.emplace_back("k2-leaves-triangles",
                        cameron_walker_graph({{"a1"}, {"b1"}, {{"a1", "b1"}}, {{"a1", 2}}, {{"b1", 1}}}));
    shapes.emplace_back("p4-leaves",
                        cameron_walker_graph({{"a1", "a2"},
                                              {"b1", "b2"},
                                              {{"a1", "b1"}, {"a2", "b1"}, {"a2", "b2"}},
                                              {{"a1", 1}, {"a2", 1}},
                                              {}}));
    shapes.emplace_back("p4-leaves-triangles",
                        cameron_walker_graph({{"a1", "a2"},
                                              {"b1", "b2"},
                                              {{"a1", "b1"}, {"a2", "b1"}, {"a2", "b2"}},
                                              {{"a1", 1}, {"a2", 1}},
                                              {{"b1", 1}, {"b2", 1}}}));
    for (const auto& [name, g] : shapes)
        for (int k = 1; k <= 2; ++k)
            lq_certifies(ctx, g, k, name + "-k" + std::to_string(k), true);
}

std::vector<std::pair<Graph, std::size_t>> clique_whiskered_instances() {
    std::mt19937 rng(49);
    std::vector<std::pair<Graph, std::size_t>> out;
    for (int t = 0; t < 20; ++t) {
        Graph g = random_graph(rng, 1, 5);
        out.emplace_back(clique_whisker(g, random_clique_partition(g, rng)), g.vertex_count());
    }
    return out;
}

// Clique whiskering forces linear quotients of all symbolic powers.
void suite_thm_4_9(Ctx& ctx) {
    auto instances = clique_whiskered_instances();
    for (std::size_t t = 0; t < instances.size(); ++t)
        for (int k = 1; k <= 2; ++k)
            lq_certifies(ctx, instances[t].first, k,
                         "instance" + std::to_string(t) + "-k" + std::to_string(k), true);
}

void suite_obs_4_10(Ctx& ctx) {
    std::mt19937 rng(410);
    // (1) a minimal cover never swallows a whole neighborhood; (2) covers
    // lift layer-wise to minimal covers of the companion graph.
    bool part1 = true, part2 = true;
    for (int t = 0; t < 15; ++t) {
        Graph g = random_graph(rng, 1, 5);
        int k = std::uniform_int_distribution<int>(1, 3)(rng);
        Graph gk = companion_graph(g, k);
        auto lifted_covers = minimal_vertex_covers(gk);
        for (const auto& c : minimal_vertex_covers(g)) {
            c.for_each([&](std::size_t x) {
                if (!g.adjacency(x).empty() && g.adjacency(x).subset_of(c)) part1 = false;
            });
            VertexSet lift(gk.vertex_count());
            c.for_each([&](std::size_t x) {
                for (int p = 1; p <= k; ++p)
                    lift.set(gk.index_of(g.label(x) + "_" + std::to_string(p)));
            });
            if (std::find(lifted_covers.begin(), lifted_covers.end(), lift) == lifted_covers.end())
                part2 = false;
        }
    }
    ctx.check("minimal-cover-avoids-full-neighborhood", part1);
    ctx.check("cover-lifts-to-companion", part2);
    // (4) for clique-whiskered graphs, the top generator degree of the
    // companion cover ideal is k times the base vertex count.
    bool part4 = true;
    for (const auto& [g, base_n] : clique_whiskered_instances()) {
        for (int k = 1; k <= 2; ++k) {
            MonomialIdeal j = cover_ideal(companion_graph(g, k));
            if (deg_max(j) != static_cast<std::uint64_t>(k) * base_n) part4 = false;
        }
    }
    ctx.check("clique-whisker-degree-identity", part4);
}

void suite_cor_4_11(Ctx& ctx) {
    auto reg_matches = [&](const Graph& g, int k, const std::string& name) {
        MonomialIdeal j = cover_ideal(g);
        std::int64_t expected = static_cast<std::int64_t>(k) * static_cast<std::int64_t>(deg_max(j));
        std::int64_t got = regularity(symbolic_power_cover(g, k), 2, ctx.threads);
        ctx.check(name, got == expected,
                  "reg=" + std::to_string(got) + " expected=" + std::to_string(expected));
    };
    // (a) star complete graphs
    for (const auto& sizes : std::vector<std::vector<int>>{{3, 3}, {2, 2, 2}}) {
        std::string tag = "star-complete";
        for (int s : sizes) tag += "-" + std::to_string(s);
        for (int k = 1; k <= 2; ++k)
            reg_matches(star_complete({"x", sizes}), k, tag + "-k" + std::to_string(k));
    }
    // (b) clique-whiskered graphs (kept small enough for exact Betti tables)
    {
        auto instances = clique_whiskered_instances();
        int used = 0;
        for (std::size_t t = 0; t < instances.size() && used < 4; ++t) {
            if (instances[t].first.vertex_count() > 8) continue;
            ++used;
            for (int k = 1; k <= 2; ++k)
                reg_matches(instances[t].first, k,
                            "clique-whisker-instance" + std::to_string(t) + "-k" + std::to_string(k));
        }
    }
    // (c) bipartite graphs with non-pure attachments on one side: whiskering
    // every vertex of one part keeps the graph bipartite, the part is a
    // vertex cover, and its complement is independent.
    {
        auto bipartite_whiskered = [&](const Graph& base, const std::vector<std::string>& part) {
            VertexSet s(base.vertex_count());
            for (const auto& l : part) s.set(base.index_of(l));
            return add_whiskers(base, s);
        };
        Graph p4 = graph_from_spec(json{{"family", "path"}, {"n", 4}});
        Graph c6 = graph_from_spec(json{{"family", "cycle"}, {"n", 6}});
        Graph k23 = graph_from_spec(json{{"family", "complete_bipartite"}, {"m", 2}, {"n", 3}});
        std::vector<std::pair<std::string, Graph>> cases{
            {"p4-whiskered", bipartite_whiskered(p4, {"x1", "x3"})},
            {"c6-whiskered", bipartite_whiskered(c6, {"x1", "x3", "x5"})},
            {"k23-whiskered", bipartite_whiskered(k23, {"x1", "x2"})},
        };
        for (const auto& [name, g] : cases)
            for (int k = 1; k <= 2; ++k) reg_matches(g, k, name + "-k" + std::to_string(k));
    }
    // Ordinary and symbolic powers of bipartite cover ideals coincide.
    {
        std::mt19937 rng(411);
        bool all = true;
        for (int t = 0; t < 10; ++t) {
            Graph g = random_bipartite(rng, 6);
            if (g.edge_count() == 0) continue;
            MonomialIdeal j = cover_ideal(g);
            for (int k = 1; k <= 3; ++k)
                if (!(power(j, k) == symbolic_power_cover(g, k))) all = false;
        }
        ctx.check("bipartite-ordinary-equals-symbolic", all);
    }
}

void suite_ex_4_4(Ctx& ctx) {
    Graph g = ex44_graph();
    file_matches(ctx, "ex-4.4.json", g);
    auto vd = is_vertex_decomposable(g, ctx.budget);
    ctx.check("graph-vertex-decomposable",
              vd.outcome == Outcome::certified && validate_vd_certificate(g, vd));
    MonomialIdeal j2 = symbolic_power_cover(g, 2);
    MonomialIdeal pol = polarize(j2).ideal;
    auto lq = linear_quotients_order(pol, ctx.budget);
    ctx.check("polarized-j2-lq-refuted", lq.outcome == Outcome::refuted, outcome_note("lq", lq));
    ctx.check("j2-not-componentwise-linear-p2", !is_componentwise_linear(j2, 2, ctx.threads));
    ctx.check("j2-not-componentwise-linear-p3", !is_componentwise_linear(j2, 3, ctx.threads));
    ctx.check("companion-not-seq-cm-p2", !seq_cm_proxy(companion_graph(g, 2), 2, ctx.threads));
    ctx.check("companion-not-seq-cm-p3", !seq_cm_proxy(companion_graph(g, 2), 3, ctx.threads));
}

void suite_ex_4_12(Ctx& ctx) {
    Graph g = ex412_graph();
    file_matches(ctx, "ex-4.12.json", g);
    MonomialIdeal j = cover_ideal(g);
    MonomialIdeal expected = MonomialIdeal::make(
        j.ring(), {monomial_of(j.ring(), {"x1", "x2", "x3"}),
                   monomial_of(j.ring(), {"x2", "x3", "x4", "x5"}),
                   monomial_of(j.ring(), {"x1", "x3", "x6", "x7"}),
                   monomial_of(j.ring(), {"x1", "x2", "x8", "x9"})});
    ctx.check("cover-ideal-generators", j == expected, render_ideal(j));
    MonomialIdeal j2 = symbolic_power_cover(g, 2);
    std::vector<Monomial> gens = power(j, 2).generators();
    gens.push_back(monomial_of(j.ring(), {"x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8", "x9"}));
    ctx.check("j2-is-square-plus-top", j2 == MonomialIdeal::make(j.ring(), std::move(gens)));
    for (int p : {2, 3}) {
        ctx.check("reg-j-p" + std::to_string(p), regularity(j, p, ctx.threads) == 4);
        ctx.check("reg-j2-p" + std::to_string(p), regularity(j2, p, ctx.threads) == 9);
    }
}

using SuiteFn = void (*)(Ctx&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
    static const std::vector<std::pair<std::string, SuiteFn>> table{
        {"lem-2.9", suite_lem_2_9},   {"lem-3.1", suite_lem_3_1},
        {"lem-3.3", suite_lem_3_3},   {"thm-3.7", suite_thm_3_7},
        {"thm-3.8", suite_thm_3_8},   {"thm-4.2", suite_thm_4_2},
        {"thm-4.3", suite_thm_4_3},   {"cor-4.5", suite_cor_4_5},
        {"cor-4.7", suite_cor_4_7},   {"thm-4.9", suite_thm_4_9},
        {"obs-4.10", suite_obs_4_10}, {"cor-4.11", suite_cor_4_11},
        {"ex-4.4", suite_ex_4_4},     {"ex-4.12", suite_ex_4_12},
    };
    return table;
}

} // namespace

const std::vector<std::string>& verify_suite_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& [id, fn] : suite_table()) out.push_back(id);
        return out;
    }();
    return ids;
}

VerifySuiteResult run_verify_suite(const std::string& id, const Budget& budget, unsigned threads,
                                   const std::string& data_dir) {
    for (const auto& [name, fn] : suite_table()) {
        if (name != id) continue;
        Ctx ctx{budget, threads, data_dir, {}};
        ctx.result.suite = id;
        auto t0 = Clock::now();
        fn(ctx);
        ctx.result.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        ctx.result.passed = !ctx.result.checks.empty() &&
                            std::all_of(ctx.result.checks.begin(), ctx.result.checks.end(),
                                        [](const VerifyCheck& c) { return c.passed; });
        return ctx.result;
    }
    throw domain_error("unknown verify suite: " + id);
}

std::vector<VerifySuiteResult> run_all_verify_suites(const Budget& budget, unsigned threads,
                                                     const std::string& data_dir) {
    std::vector<VerifySuiteResult> out;
    for (const auto& id : verify_suite_ids())
        out.push_back(run_verify_suite(id, budget, threads, data_dir));
    return out;
}

} // namespace cvi
