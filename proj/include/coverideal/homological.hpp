#ifndef COVERIDEAL_HOMOLOGICAL_HPP
#define COVERIDEAL_HOMOLOGICAL_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "coverideal/graph.hpp"
#include "coverideal/monomial_ideal.hpp"
#include "coverideal/simplicial.hpp"

namespace cvi {

/// Search caps for the exponential procedures (linear quotients, vertex
/// decomposability). Exceeding either aborts with outcome budget_exceeded.
struct Budget {
    std::uint64_t max_nodes = 10'000'000;
    double max_seconds = 600.0;
};

/// Tri-state result of a certificate search. A refutation is a proof
/// (exhaustive search), never a timeout.
enum class Outcome { certified, refuted, budget_exceeded };

/// Graded Betti numbers beta_{i,j} over a fixed prime field; only nonzero
/// entries are stored.
class BettiTable {
public:
    explicit BettiTable(int field) : field_(field) {}

    int field() const { return field_; }
    const std::map<std::pair<int, std::uint64_t>, std::uint64_t>& entries() const { return entries_; }

    void add(int i, std::uint64_t j, std::uint64_t count);
    std::uint64_t get(int i, std::uint64_t j) const;
    bool empty() const { return entries_.empty(); }

    int projective_dimension() const;
    /// max{j - i : beta_{i,j} != 0}; error on the empty table.
    std::int64_t regularity() const;

    bool operator==(const BettiTable& o) const {
        return field_ == o.field_ && entries_ == o.entries_;
    }
    /// Entry equality ignoring the field tag.
    bool same_entries(const BettiTable& o) const { return entries_ == o.entries_; }

    /// Macaulay2-style triangular text rendering.
    std::string render() const;

private:
    int field_;
    std::map<std::pair<int, std::uint64_t>, std::uint64_t> entries_;
};

enum class HochsterRoute {
    automatic,
    direct, // sum over vertex subsets W of homology of the restricted complex
    dual,   // sum over faces of the dual complex of link homology
};

/// Exact Betti table of a squarefree ideal over F_p via Hochster's formula.
/// The direct route caps the ring at 20 variables (2^n outer loop); the dual
/// route caps at 24. `threads` caps parallel workers for the outer loop.
BettiTable betti_table_hochster(const MonomialIdeal& a, int p,
                                HochsterRoute route = HochsterRoute::automatic,
                                unsigned threads = 1);

/// Betti table of an arbitrary monomial ideal: polarizes (which preserves
/// graded Betti numbers by total degree), then applies Hochster.
BettiTable betti_table(const MonomialIdeal& a, int p,
                       HochsterRoute route = HochsterRoute::automatic, unsigned threads = 1);

/// reg(I) of the ideal itself (not R/I); error on the zero ideal.
std::int64_t regularity(const MonomialIdeal& a, int p, unsigned threads = 1);

/// All minimal generators in one degree d and reg = d.
bool has_linear_resolution(const MonomialIdeal& a, int p, unsigned threads = 1);

/// Every degree-d truncation I_<d>, for d from the least generator degree
/// through deg_max, has a linear resolution. Checked in increasing degree
/// with early exit.
bool is_componentwise_linear(const MonomialIdeal& a, int p, unsigned threads = 1);

/// Sequential Cohen-Macaulayness proxy: componentwise linearity of the
/// cover ideal over F_p. Field-dependent in general.
bool seq_cm_proxy(const Graph& g, int p, unsigned threads = 1);

/// Admissible generator ordering with per-step colon variables, or a
/// refutation/budget marker. Indices refer to a's canonical generator order.
struct LinearQuotientCertificate {
    Outcome outcome = Outcome::refuted;
    std::vector<std::size_t> order;
    std::vector<std::vector<std::size_t>> colon_vars; // per step; [0] is empty
    std::uint64_t nodes_explored = 0;
};

/// Backtracking search for a linear-quotients order of a minimalized ideal.
/// Lowest-degree addable generators are tried first; refutation means the
/// whole search tree was exhausted.
LinearQuotientCertificate linear_quotients_order(const MonomialIdeal& a, const Budget& budget = {});

/// Independent re-check: order is a permutation and each prefix colon is
/// exactly the recorded variable set.
bool validate_linear_quotients(const MonomialIdeal& a, const LinearQuotientCertificate& cert);

/// Herzog-Takayama Betti numbers from a linear-quotients order:
/// beta_{i, deg(u_j)+i} += C(r_j, i) with r_j the colon count at step j.
/// Characteristic-free; p only tags the table.
BettiTable betti_from_linear_quotients(const MonomialIdeal& a,
                                       const LinearQuotientCertificate& cert, int p);

/// Shedding-vertex decomposition tree, stored as a DAG over the distinct
/// induced subgraphs encountered (equal subgraphs share one node; children
/// are strict subsets of their parents, so no cycles). Node 0 is the whole
/// graph.
struct VDCertificate {
    struct Node {
        std::vector<std::string> vertices; // labels of the induced subgraph
        std::string shedding;              // empty on leaves (edgeless)
        int child_minus_vertex = -1;
        int child_minus_closed = -1;
    };
    Outcome outcome = Outcome::refuted;
    std::vector<Node> nodes;
    std::uint64_t nodes_explored = 0;
};

/// Memoized shedding-vertex recursion over induced-subgraph bitmasks.
VDCertificate is_vertex_decomposable(const Graph& g, const Budget& budget = {});

/// Independent re-check of a decomposition tree against g.
bool validate_vd_certificate(const Graph& g, const VDCertificate& cert);

} // namespace cvi

#endif
