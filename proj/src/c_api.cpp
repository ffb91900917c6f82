#include "coverideal.h"

#include <cstring>
#include <string>

#include "coverideal/constructions.hpp"
#include "coverideal/io.hpp"
#include "coverideal/verify.hpp"

struct cvi_graph {
    cvi::Graph g;
};

struct cvi_ideal {
    cvi::MonomialIdeal i;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

/// Runs fn, translating exceptions into status codes + last-error text.
template <class Fn>
cvi_status guard(Fn fn) {
    try {
        fn();
        return CVI_OK;
    } catch (const cvi::budget_exceeded& e) {
        g_last_error = e.what();
        return CVI_ERR_BUDGET;
    } catch (const cvi::io_error& e) {
        g_last_error = e.what();
        return CVI_ERR_IO;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CVI_ERR_DOMAIN;
    }
}

cvi_status need(bool ok, const char* message) {
    if (ok) return CVI_OK;
    g_last_error = message;
    return CVI_ERR_DOMAIN;
}

cvi::Budget make_budget(unsigned long long nodes, double secs) {
    cvi::Budget b;
    if (nodes) b.max_nodes = nodes;
    if (secs > 0) b.max_seconds = secs;
    return b;
}

cvi::json check_report(const std::string& pred, const cvi_graph* g, const cvi_ideal* a, int p,
                       const cvi::Budget& budget, unsigned threads) {
    using cvi::json;
    json report{{"predicate", pred}, {"field", p}};
    if (pred == "lq") {
        if (!a) throw cvi::domain_error("lq needs an ideal");
        auto cert = cvi::linear_quotients_order(a->i, budget);
        report["outcome"] = cvi::outcome_to_string(cert.outcome);
        report["nodes_explored"] = cert.nodes_explored;
        if (cert.outcome == cvi::Outcome::certified)
            report["certificate"] = cvi::lq_certificate_to_json(a->i, cert);
        return report;
    }
    if (pred == "vd") {
        if (!g) throw cvi::domain_error("vd needs a graph");
        auto cert = cvi::is_vertex_decomposable(g->g, budget);
        report["outcome"] = cvi::outcome_to_string(cert.outcome);
        report["nodes_explored"] = cert.nodes_explored;
        if (cert.outcome == cvi::Outcome::certified)
            report["certificate"] = cvi::vd_certificate_to_json(g->g, cert);
        return report;
    }
    bool value;
    if (pred == "cwl") {
        if (!a) throw cvi::domain_error("cwl needs an ideal");
        value = cvi::is_componentwise_linear(a->i, p, threads);
    } else if (pred == "linres") {
        if (!a) throw cvi::domain_error("linres needs an ideal");
        value = cvi::has_linear_resolution(a->i, p, threads);
    } else if (pred == "seqcm") {
        if (!g) throw cvi::domain_error("seqcm needs a graph");
        value = cvi::seq_cm_proxy(g->g, p, threads);
    } else {
        throw cvi::domain_error("unknown predicate: " + pred);
    }
    report["value"] = value;
    return report;
}

cvi::json suite_to_json(const cvi::VerifySuiteResult& r) {
    cvi::json checks = cvi::json::array();
    for (const auto& c : r.checks) {
        cvi::json item{{"name", c.name}, {"passed", c.passed}};
        if (!c.detail.empty()) item["detail"] = c.detail;
        checks.push_back(std::move(item));
    }
    return cvi::json{
        {"suite", r.suite}, {"passed", r.passed}, {"seconds", r.seconds}, {"checks", checks}};
}

} // namespace

extern "C" {

const char* cvi_version(void) { return "coverideal 1.0.0"; }

const char* cvi_last_error(void) { return g_last_error.c_str(); }

void cvi_string_free(char* s) { delete[] s; }

cvi_status cvi_graph_from_json(const char* json_text, cvi_graph** out) {
    if (auto st = need(json_text && out, "null argument")) return st;
    return guard([&] { *out = new cvi_graph{cvi::graph_from_json(cvi::parse_json(json_text))}; });
}

cvi_status cvi_graph_from_spec(const char* spec_json, cvi_graph** out) {
    if (auto st = need(spec_json && out, "null argument")) return st;
    return guard([&] { *out = new cvi_graph{cvi::graph_from_spec(cvi::parse_json(spec_json))}; });
}

cvi_status cvi_graph_from_edge_list(const char* text, cvi_graph** out) {
    if (auto st = need(text && out, "null argument")) return st;
    return guard([&] { *out = new cvi_graph{cvi::graph_from_edge_list(text)}; });
}

cvi_status cvi_graph_to_json(const cvi_graph* g, char** out_json) {
    if (auto st = need(g && out_json, "null argument")) return st;
    return guard([&] { *out_json = dup_string(cvi::graph_to_json(g->g).dump()); });
}

cvi_status cvi_graph_to_edge_list(const cvi_graph* g, char** out_text) {
    if (auto st = need(g && out_text, "null argument")) return st;
    return guard([&] { *out_text = dup_string(cvi::graph_to_edge_list(g->g)); });
}

cvi_status cvi_graph_info(const cvi_graph* g, char** out_json) {
    if (auto st = need(g && out_json, "null argument")) return st;
    return guard([&] {
        cvi::json degrees = cvi::json::object();
        for (std::size_t v = 0; v < g->g.vertex_count(); ++v)
            degrees[g->g.label(v)] = g->g.degree(v);
        cvi::json info{{"vertices", g->g.vertex_count()},
                       {"edges", g->g.edge_count()},
                       {"components", cvi::connected_component_masks(g->g).size()},
                       {"degrees", degrees}};
        if (g->g.edge_count() <= 24) {
            info["matching_number"] = cvi::matching_number(g->g);
            info["induced_matching_number"] = cvi::induced_matching_number(g->g);
            info["cameron_walker"] = cvi::is_cameron_walker(g->g);
        }
        *out_json = dup_string(info.dump());
    });
}

cvi_status cvi_graph_companion(const cvi_graph* g, int k, cvi_graph** out) {
    if (auto st = need(g && out, "null argument")) return st;
    return guard([&] { *out = new cvi_graph{cvi::companion_graph(g->g, k)}; });
}

void cvi_graph_free(cvi_graph* g) { delete g; }

cvi_status cvi_ideal_from_json(const char* json_text, cvi_ideal** out) {
    if (auto st = need(json_text && out, "null argument")) return st;
    return guard([&] { *out = new cvi_ideal{cvi::ideal_from_json(cvi::parse_json(json_text))}; });
}

cvi_status cvi_ideal_to_json(const cvi_ideal* a, char** out_json) {
    if (auto st = need(a && out_json, "null argument")) return st;
    return guard([&] { *out_json = dup_string(cvi::ideal_to_json(a->i).dump()); });
}

cvi_status cvi_ideal_render(const cvi_ideal* a, char** out_text) {
    if (auto st = need(a && out_text, "null argument")) return st;
    return guard([&] { *out_text = dup_string(cvi::render_ideal(a->i)); });
}

cvi_status cvi_cover_ideal(const cvi_graph* g, cvi_ideal** out) {
    if (auto st = need(g && out, "null argument")) return st;
    return guard([&] { *out = new cvi_ideal{cvi::cover_ideal(g->g)}; });
}

cvi_status cvi_edge_ideal(const cvi_graph* g, cvi_ideal** out) {
    if (auto st = need(g && out, "null argument")) return st;
    return guard([&] { *out = new cvi_ideal{cvi::edge_ideal(g->g)}; });
}

cvi_status cvi_symbolic_power(const cvi_graph* g, int k, cvi_ideal** out) {
    if (auto st = need(g && out, "null argument")) return st;
    return guard([&] { *out = new cvi_ideal{cvi::symbolic_power_cover(g->g, k)}; });
}

cvi_status cvi_ideal_power(const cvi_ideal* a, int k, cvi_ideal** out) {
    if (auto st = need(a && out, "null argument")) return st;
    return guard([&] { *out = new cvi_ideal{cvi::power(a->i, k)}; });
}

cvi_status cvi_ideal_intersect(const cvi_ideal* a, const cvi_ideal* b, cvi_ideal** out) {
    if (auto st = need(a && b && out, "null argument")) return st;
    return guard([&] { *out = new cvi_ideal{cvi::intersect(a->i, b->i)}; });
}

cvi_status cvi_ideal_polarize(const cvi_ideal* a, cvi_ideal** out) {
    if (auto st = need(a && out, "null argument")) return st;
    return guard([&] { *out = new cvi_ideal{cvi::polarize(a->i).ideal}; });
}

cvi_status cvi_ideal_dual(const cvi_ideal* a, cvi_ideal** out) {
    if (auto st = need(a && out, "null argument")) return st;
    return guard([&] { *out = new cvi_ideal{cvi::alexander_dual(a->i)}; });
}

void cvi_ideal_free(cvi_ideal* a) { delete a; }

cvi_status cvi_betti(const cvi_ideal* a, int p, unsigned threads, char** out_json) {
    if (auto st = need(a && out_json, "null argument")) return st;
    return guard([&] {
        *out_json = dup_string(
            cvi::betti_to_json(cvi::betti_table(a->i, p, cvi::HochsterRoute::automatic, threads))
                .dump());
    });
}

cvi_status cvi_betti_render(const char* betti_json, char** out_text) {
    if (auto st = need(betti_json && out_text, "null argument")) return st;
    return guard([&] {
        *out_text = dup_string(cvi::betti_from_json(cvi::parse_json(betti_json)).render());
    });
}

cvi_status cvi_regularity(const cvi_ideal* a, int p, unsigned threads, long long* out) {
    if (auto st = need(a && out, "null argument")) return st;
    return guard([&] { *out = cvi::regularity(a->i, p, threads); });
}

cvi_status cvi_check(const char* pred, const cvi_graph* g, const cvi_ideal* a, int p,
                     unsigned long long budget_nodes, double budget_secs, unsigned threads,
                     char** out_json) {
    if (auto st = need(pred && out_json, "null argument")) return st;
    return guard([&] {
        *out_json = dup_string(
            check_report(pred, g, a, p, make_budget(budget_nodes, budget_secs), threads).dump());
    });
}

cvi_status cvi_validate_certificate(const char* cert_json, int* out_valid) {
    if (auto st = need(cert_json && out_valid, "null argument")) return st;
    return guard([&] {
        *out_valid = cvi::validate_certificate_json(cvi::parse_json(cert_json)) ? 1 : 0;
    });
}

cvi_status cvi_verify(const char* suite, unsigned long long budget_nodes, double budget_secs,
                      unsigned threads, const char* data_dir, char** out_json) {
    if (auto st = need(suite && out_json, "null argument")) return st;
    return guard([&] {
        cvi::Budget budget = make_budget(budget_nodes, budget_secs);
        std::string dir = data_dir ? data_dir : "";
        cvi::json out = cvi::json::array();
        if (std::string(suite) == "all") {
            for (const auto& r : cvi::run_all_verify_suites(budget, threads, dir))
                out.push_back(suite_to_json(r));
        } else {
            out.push_back(suite_to_json(cvi::run_verify_suite(suite, budget, threads, dir)));
        }
        *out_json = dup_string(out.dump());
    });
}

} // extern "C"
