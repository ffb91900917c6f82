#include "coverideal/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace cvi {

namespace {

const json& require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw io_error(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::vector<std::string> string_list(const json& j, const char* what) {
    if (!j.is_array()) throw io_error(std::string(what) + " must be an array of strings");
    std::vector<std::string> out;
    for (const auto& v : j) {
        if (!v.is_string()) throw io_error(std::string(what) + " must be an array of strings");
        out.push_back(v.get<std::string>());
    }
    return out;
}

std::vector<std::string> numbered(const char* prefix, int n) {
    std::vector<std::string> out;
    for (int i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

int int_field(const json& j, const char* key) {
    const json& v = require(j, key);
    if (!v.is_number_integer()) throw io_error(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

} // namespace

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (auto [a, b] : g.edges()) edges.push_back({g.label(a), g.label(b)});
    return json{{"vertices", g.labels()}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
    auto vertices = string_list(require(j, "vertices"), "\"vertices\"");
    std::vector<std::pair<std::string, std::string>> edges;
    const json& je = require(j, "edges");
    if (!je.is_array()) throw io_error("\"edges\" must be an array of label pairs");
    for (const auto& e : je) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw io_error("\"edges\" must be an array of label pairs");
        edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return Graph::from_labeled_edges(std::move(vertices), edges);
}

Graph graph_from_edge_list(const std::string& text) {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    auto declare = [&](const std::string& v) {
        if (std::find(vertices.begin(), vertices.end(), v) == vertices.end()) vertices.push_back(v);
    };
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a) || a[0] == '#') continue;
        if (!(ls >> b)) {
            declare(a);
            continue;
        }
        if (ls >> extra) throw io_error("edge list line has more than two labels: " + line);
        declare(a);
        declare(b);
        edges.emplace_back(a, b);
    }
    return Graph::from_labeled_edges(std::move(vertices), edges);
}

std::string graph_to_edge_list(const Graph& g) {
    // Declare every vertex first so the reader reconstructs the exact
    // vertex order (and isolated vertices) before listing the edges.
    std::string out;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) out += g.label(v) + "\n";
    for (auto [a, b] : g.edges()) out += g.label(a) + " " + g.label(b) + "\n";
    return out;
}

json ideal_to_json(const MonomialIdeal& a) {
    json gens = json::array();
    for (const auto& g : a.generators()) gens.push_back(g.exponents());
    return json{{"ring", a.ring().vars}, {"generators", gens}};
}

MonomialIdeal ideal_from_json(const json& j) {
    Ring ring{string_list(require(j, "ring"), "\"ring\"")};
    const json& jg = require(j, "generators");
    if (!jg.is_array()) throw io_error("\"generators\" must be an array of exponent vectors");
    std::vector<Monomial> gens;
    for (const auto& e : jg) {
        if (!e.is_array() || e.size() != ring.size())
            throw io_error("generator exponent vector length must match the ring");
        std::vector<std::uint32_t> exps;
        for (const auto& x : e) {
            if (!x.is_number_integer() || x.get<std::int64_t>() < 0)
                throw io_error("exponents must be non-negative integers");
            exps.push_back(x.get<std::uint32_t>());
        }
        gens.emplace_back(std::move(exps));
    }
    return MonomialIdeal::make(std::move(ring), std::move(gens));
}

Graph graph_from_spec(const json& j) {
    if (!j.is_object()) throw io_error("graph spec must be a JSON object");
    if (!j.contains("family")) return graph_from_json(j);
    std::string family = require(j, "family").get<std::string>();
    if (family == "edges") return graph_from_json(j);
    if (family == "path" || family == "cycle" || family == "complete") {
        int n = int_field(j, "n");
        if (n < 1) throw domain_error("family size must be positive");
        std::vector<std::pair<std::string, std::string>> edges;
        auto v = numbered("x", n);
        if (family == "complete") {
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b) edges.emplace_back(v[a], v[b]);
        } else {
            for (int a = 0; a + 1 < n; ++a) edges.emplace_back(v[a], v[a + 1]);
            if (family == "cycle") {
                if (n < 3) throw domain_error("cycle needs at least 3 vertices");
                edges.emplace_back(v[n - 1], v[0]);
            }
        }
        return Graph::from_labeled_edges(std::move(v), edges);
    }
    if (family == "complete_bipartite") {
        int m = int_field(j, "m"), n = int_field(j, "n");
        if (m < 1 || n < 1) throw domain_error("family size must be positive");
        std::vector<std::string> labels = numbered("x", m);
        for (const auto& l : numbered("y", n)) labels.push_back(l);
        std::vector<std::pair<std::string, std::string>> edges;
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < n; ++b) edges.emplace_back(labels[a], labels[m + b]);
        return Graph::from_labeled_edges(std::move(labels), edges);
    }
    if (family == "star_complete") {
        StarCompleteSpec spec;
        spec.center = j.contains("center") ? require(j, "center").get<std::string>() : "x";
        for (const auto& s : require(j, "sizes")) spec.sizes.push_back(s.get<int>());
        return star_complete(spec);
    }
    if (family == "g_k") return companion_graph(graph_from_spec(require(j, "base")), int_field(j, "k"));
    if (family == "whisker") {
        Graph base = graph_from_spec(require(j, "base"));
        VertexSet s(base.vertex_count());
        for (const auto& l : string_list(require(j, "vertices"), "\"vertices\""))
            s.set(base.index_of(l));
        return add_whiskers(base, s);
    }
    if (family == "clique_whisker") {
        Graph base = graph_from_spec(require(j, "base"));
        std::vector<std::vector<std::string>> parts;
        for (const auto& p : require(j, "partition")) parts.push_back(string_list(p, "partition part"));
        return clique_whisker(base, clique_partition_from_labels(base, parts));
    }
    if (family == "attach") {
        AttachmentSpec spec{graph_from_spec(require(j, "base")), {}};
        for (const auto& att : require(j, "attachments")) {
            if (!att.is_array() || att.size() != 2)
                throw io_error("attachments must be [vertex, [sizes]] pairs");
            std::vector<int> sizes;
            for (const auto& s : att[1]) sizes.push_back(s.get<int>());
            spec.attachments.emplace_back(att[0].get<std::string>(), std::move(sizes));
        }
        return attach(spec);
    }
    if (family == "cameron_walker") {
        CameronWalkerSpec spec;
        spec.a = string_list(require(j, "a"), "\"a\"");
        spec.b = string_list(require(j, "b"), "\"b\"");
        for (const auto& e : require(j, "edges")) {
            if (!e.is_array() || e.size() != 2) throw io_error("edges must be label pairs");
            spec.edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
        }
        if (j.contains("leaves"))
            for (const auto& [k, v] : j.at("leaves").items()) spec.leaves[k] = v.get<int>();
        if (j.contains("triangles"))
            for (const auto& [k, v] : j.at("triangles").items()) spec.triangles[k] = v.get<int>();
        return cameron_walker_graph(spec);
    }
    throw io_error("unknown graph family: " + family);
}

json betti_to_json(const BettiTable& t) {
    json entries = json::array();
    for (const auto& [key, beta] : t.entries()) entries.push_back({key.first, key.second, beta});
    return json{{"field", t.field()}, {"entries", entries}};
}

BettiTable betti_from_json(const json& j) {
    BettiTable t(int_field(j, "field"));
    for (const auto& e : require(j, "entries")) {
        if (!e.is_array() || e.size() != 3) throw io_error("Betti entries must be [i, j, beta] triples");
        t.add(e[0].get<int>(), e[1].get<std::uint64_t>(), e[2].get<std::uint64_t>());
    }
    return t;
}

std::string outcome_to_string(Outcome o) {
    switch (o) {
        case Outcome::certified: return "certified";
        case Outcome::refuted: return "refuted";
        case Outcome::budget_exceeded: return "budget-exceeded";
    }
    throw domain_error("unknown outcome");
}

namespace {

Outcome outcome_from_string(const std::string& s) {
    if (s == "certified") return Outcome::certified;
    if (s == "refuted") return Outcome::refuted;
    if (s == "budget-exceeded") return Outcome::budget_exceeded;
    throw io_error("unknown outcome: " + s);
}

} // namespace

json lq_certificate_to_json(const MonomialIdeal& a, const LinearQuotientCertificate& cert) {
    return json{{"type", "linear_quotients"},
                {"outcome", outcome_to_string(cert.outcome)},
                {"ideal", ideal_to_json(a)},
                {"order", cert.order},
                {"colon_vars", cert.colon_vars},
                {"nodes_explored", cert.nodes_explored}};
}

json vd_certificate_to_json(const Graph& g, const VDCertificate& cert) {
    json nodes = json::array();
    for (const auto& n : cert.nodes) {
        json node{{"vertices", n.vertices}};
        if (!n.shedding.empty()) {
            node["shedding"] = n.shedding;
            node["minus_vertex"] = n.child_minus_vertex;
            node["minus_closed"] = n.child_minus_closed;
        }
        nodes.push_back(std::move(node));
    }
    return json{{"type", "vertex_decomposition"},
                {"outcome", outcome_to_string(cert.outcome)},
                {"graph", graph_to_json(g)},
                {"nodes", nodes},
                {"nodes_explored", cert.nodes_explored}};
}

bool validate_certificate_json(const json& j) {
    std::string type = require(j, "type").get<std::string>();
    if (type == "linear_quotients") {
        MonomialIdeal a = ideal_from_json(require(j, "ideal"));
        LinearQuotientCertificate cert;
        cert.outcome = outcome_from_string(require(j, "outcome").get<std::string>());
        cert.order = require(j, "order").get<std::vector<std::size_t>>();
        cert.colon_vars = require(j, "colon_vars").get<std::vector<std::vector<std::size_t>>>();
        return validate_linear_quotients(a, cert);
    }
    if (type == "vertex_decomposition") {
        Graph g = graph_from_json(require(j, "graph"));
        VDCertificate cert;
        cert.outcome = outcome_from_string(require(j, "outcome").get<std::string>());
        for (const auto& n : require(j, "nodes")) {
            VDCertificate::Node node;
            node.vertices = string_list(require(n, "vertices"), "node \"vertices\"");
            if (n.contains("shedding")) {
                node.shedding = n.at("shedding").get<std::string>();
                node.child_minus_vertex = int_field(n, "minus_vertex");
                node.child_minus_closed = int_field(n, "minus_closed");
            }
            cert.nodes.push_back(std::move(node));
        }
        return validate_vd_certificate(g, cert);
    }
    throw io_error("unknown certificate type: " + type);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot write " + path);
    out << content;
    if (!out) throw io_error("write failed for " + path);
}

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw io_error("malformed JSON input");
    return j;
}

} // namespace cvi
