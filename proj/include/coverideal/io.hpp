#ifndef COVERIDEAL_IO_HPP
#define COVERIDEAL_IO_HPP

#include <string>

#include "json.hpp"

#include "coverideal/constructions.hpp"
#include "coverideal/graph.hpp"
#include "coverideal/homological.hpp"
#include "coverideal/monomial_ideal.hpp"

namespace cvi {

using json = nlohmann::json;

// Graph JSON: {"vertices": ["x1", ...], "edges": [["x1","x2"], ...]}.
json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

// Plain text edge list: one edge per line (two whitespace-separated labels);
// a line with a single label declares an isolated vertex. '#' starts a
// comment line.
Graph graph_from_edge_list(const std::string& text);
std::string graph_to_edge_list(const Graph& g);

// Ideal JSON: {"ring": ["x1",...], "generators": [[e1,...,en], ...]}.
json ideal_to_json(const MonomialIdeal& a);
MonomialIdeal ideal_from_json(const json& j);

/// Builds a graph from either plain graph JSON or a family spec
/// {"family": name, ...}. Families: path/cycle/complete {"n"},
/// complete_bipartite {"m","n"}, edges {"vertices","edges"} alias,
/// star_complete {"center"?, "sizes"}, g_k {"base","k"},
/// whisker {"base","vertices"}, clique_whisker {"base","partition"},
/// attach {"base","attachments":[[v,[sizes]],...]},
/// cameron_walker {"a","b","edges","leaves"?,"triangles"?}.
/// "base" may itself be a graph or family spec.
Graph graph_from_spec(const json& j);

// BettiTable JSON: {"field": p, "entries": [[i, j, beta], ...]}.
json betti_to_json(const BettiTable& t);
BettiTable betti_from_json(const json& j);

// Certificates embed their subject so a file is self-checking:
// {"type":"linear_quotients","outcome":...,"ideal":...,"order":...,
//  "colon_vars":...} and
// {"type":"vertex_decomposition","outcome":...,"graph":...,"nodes":[...]}.
json lq_certificate_to_json(const MonomialIdeal& a, const LinearQuotientCertificate& cert);
json vd_certificate_to_json(const Graph& g, const VDCertificate& cert);

/// Re-checks a serialized certificate of either type against its embedded
/// subject using the independent validators.
bool validate_certificate_json(const json& j);

std::string outcome_to_string(Outcome o);

/// Reads a whole file; io_error on failure.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// Parses JSON text; io_error on malformed input.
json parse_json(const std::string& text);

} // namespace cvi

#endif
