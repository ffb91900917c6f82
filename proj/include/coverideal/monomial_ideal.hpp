#ifndef COVERIDEAL_MONOMIAL_IDEAL_HPP
#define COVERIDEAL_MONOMIAL_IDEAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "coverideal/errors.hpp"
#include "coverideal/graph.hpp"

namespace cvi {

/// Polynomial ring support: an ordered list of distinct variable names.
/// The coefficient field enters only in the homological layer.
struct Ring {
    std::vector<std::string> vars;

    Ring() = default;
    explicit Ring(std::vector<std::string> v);
    static Ring of_graph(const Graph& g) { return Ring(g.labels()); }

    std::size_t size() const { return vars.size(); }
    std::size_t index_of(const std::string& name) const;
    bool operator==(const Ring& o) const { return vars == o.vars; }
};

/// Exponent vector over a fixed ring.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) {}
    static Monomial one(std::size_t nvars) { return Monomial(std::vector<std::uint32_t>(nvars, 0)); }
    static Monomial variable(std::size_t nvars, std::size_t i);

    std::size_t nvars() const { return e_.size(); }
    std::uint32_t exponent(std::size_t i) const { return e_.at(i); }
    std::uint32_t& exponent(std::size_t i) { return e_.at(i); }
    const std::vector<std::uint32_t>& exponents() const { return e_; }

    std::uint64_t degree() const;
    bool is_one() const { return degree() == 0; }
    bool is_squarefree() const;
    bool divides(const Monomial& o) const;

    Monomial lcm(const Monomial& o) const;
    Monomial gcd(const Monomial& o) const;
    Monomial operator*(const Monomial& o) const;
    /// this / gcd(this, o): exponent-wise saturated subtraction.
    Monomial colon_quotient(const Monomial& o) const;

    /// Support as a vertex-set-style bitmask vector (one bit per variable).
    VertexSet support(std::size_t nvars_universe) const;

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    /// Canonical order: total degree, then exponent-vector lexicographic.
    bool operator<(const Monomial& o) const;

private:
    std::vector<std::uint32_t> e_;
};

/// Monomial ideal stored as its unique minimal generating set, sorted by
/// (degree, exponent-lex). The empty generator list is the zero ideal.
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    explicit MonomialIdeal(Ring ring) : ring_(std::move(ring)) {}

    /// Minimalizes: drops duplicates and divisibility-redundant monomials.
    static MonomialIdeal make(Ring ring, std::vector<Monomial> gens);

    static MonomialIdeal zero(Ring ring) { return MonomialIdeal(std::move(ring)); }
    static MonomialIdeal unit(Ring ring);

    const Ring& ring() const { return ring_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    std::size_t generator_count() const { return gens_.size(); }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
    bool is_squarefree() const;

    /// Membership: some generator divides m.
    bool contains(const Monomial& m) const;

    bool operator==(const MonomialIdeal& o) const { return ring_ == o.ring_ && gens_ == o.gens_; }

private:
    Ring ring_;
    std::vector<Monomial> gens_;
};

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b);
/// power(I, 0) is the unit ideal.
MonomialIdeal power(const MonomialIdeal& a, int k);
MonomialIdeal colon_by_monomial(const MonomialIdeal& a, const Monomial& m);

MonomialIdeal edge_ideal(const Graph& g);

/// Product-of-cover generators; cross-checked in debug builds against the
/// edge-prime intersection. Edgeless graphs give the unit ideal.
MonomialIdeal cover_ideal(const Graph& g);

/// Intersection of (x_i, x_j)^k over the edges; k >= 1.
MonomialIdeal symbolic_power_cover(const Graph& g, int k);

/// Alexander dual of a squarefree ideal.
MonomialIdeal alexander_dual(const MonomialIdeal& a);

/// Polarization result: squarefree ideal in variables named <var>_<p>,
/// plus the (variable, power) -> new index map.
struct Polarization {
    MonomialIdeal ideal;
    std::vector<std::pair<std::size_t, std::uint32_t>> var_map; // new index -> (orig var, power)
};
Polarization polarize(const MonomialIdeal& a);

/// Max total degree among minimal generators; zero ideal is an error.
std::uint64_t deg_max(const MonomialIdeal& a);

/// Minimal generators of the ideal generated by all degree-d elements of a.
MonomialIdeal truncation(const MonomialIdeal& a, std::uint64_t d);

/// Maps a into a ring containing (by name) all of a's variables.
MonomialIdeal embed(const MonomialIdeal& a, const Ring& target);

std::string render_monomial(const Monomial& m, const Ring& ring);
std::string render_ideal(const MonomialIdeal& a);

} // namespace cvi

#endif
