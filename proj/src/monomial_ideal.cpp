#include "coverideal/monomial_ideal.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <unordered_set>

namespace cvi {

Ring::Ring(std::vector<std::string> v) : vars(std::move(v)) {
    std::unordered_set<std::string> seen;
    for (const auto& name : vars)
        if (!seen.insert(name).second) throw domain_error("duplicate ring variable: " + name);
}

std::size_t Ring::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return i;
    throw domain_error("unknown ring variable: " + name);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i) {
    Monomial m = one(nvars);
    m.e_.at(i) = 1;
    return m;
}

std::uint64_t Monomial::degree() const {
    std::uint64_t d = 0;
    for (auto e : e_) d += e;
    return d;
}

bool Monomial::is_squarefree() const {
    return std::all_of(e_.begin(), e_.end(), [](std::uint32_t e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& o) const {
    if (e_.size() != o.e_.size()) throw domain_error("monomials from different rings");
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::lcm(const Monomial& o) const {
    if (e_.size() != o.e_.size()) throw domain_error("monomials from different rings");
    std::vector<std::uint32_t> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r[i] = std::max(e_[i], o.e_[i]);
    return Monomial(std::move(r));
}

Monomial Monomial::gcd(const Monomial& o) const {
    if (e_.size() != o.e_.size()) throw domain_error("monomials from different rings");
    std::vector<std::uint32_t> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r[i] = std::min(e_[i], o.e_[i]);
    return Monomial(std::move(r));
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (e_.size() != o.e_.size()) throw domain_error("monomials from different rings");
    std::vector<std::uint32_t> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] + o.e_[i];
    return Monomial(std::move(r));
}

Monomial Monomial::colon_quotient(const Monomial& o) const {
    if (e_.size() != o.e_.size()) throw domain_error("monomials from different rings");
    std::vector<std::uint32_t> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] > o.e_[i] ? e_[i] - o.e_[i] : 0;
    return Monomial(std::move(r));
}

VertexSet Monomial::support(std::size_t nvars_universe) const {
    VertexSet s(nvars_universe);
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i]) s.set(i);
    return s;
}

bool Monomial::operator<(const Monomial& o) const {
    auto da = degree(), db = o.degree();
    if (da != db) return da < db;
    return e_ < o.e_;
}

MonomialIdeal MonomialIdeal::make(Ring ring, std::vector<Monomial> gens) {
    for (const auto& g : gens)
        if (g.nvars() != ring.size()) throw domain_error("generator arity does not match ring");
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    MonomialIdeal out(std::move(ring));
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& kept : out.gens_)
            if (kept.divides(g)) {
                redundant = true;
                break;
            }
        if (!redundant) out.gens_.push_back(g);
    }
    return out;
}

MonomialIdeal MonomialIdeal::unit(Ring ring) {
    std::size_t n = ring.size();
    return make(std::move(ring), {Monomial::one(n)});
}

bool MonomialIdeal::is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.is_squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

namespace {

void check_rings(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (!(a.ring() == b.ring())) throw domain_error("ideal operation across different rings");
}

} // namespace

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    check_rings(a, b);
    std::vector<Monomial> gens;
    gens.reserve(a.generator_count() * b.generator_count());
    for (const auto& u : a.generators())
        for (const auto& v : b.generators()) gens.push_back(u.lcm(v));
    return MonomialIdeal::make(a.ring(), std::move(gens));
}

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b) {
    check_rings(a, b);
    std::vector<Monomial> gens;
    gens.reserve(a.generator_count() * b.generator_count());
    for (const auto& u : a.generators())
        for (const auto& v : b.generators()) gens.push_back(u * v);
    return MonomialIdeal::make(a.ring(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& a, int k) {
    if (k < 0) throw domain_error("negative ideal power");
    MonomialIdeal r = MonomialIdeal::unit(a.ring());
    for (int i = 0; i < k; ++i) r = multiply(r, a);
    return r;
}

MonomialIdeal colon_by_monomial(const MonomialIdeal& a, const Monomial& m) {
    if (m.nvars() != a.ring().size()) throw domain_error("colon monomial arity does not match ring");
    std::vector<Monomial> gens;
    gens.reserve(a.generator_count());
    for (const auto& u : a.generators()) gens.push_back(u.colon_quotient(m));
    return MonomialIdeal::make(a.ring(), std::move(gens));
}

MonomialIdeal edge_ideal(const Graph& g) {
    Ring ring = Ring::of_graph(g);
    std::vector<Monomial> gens;
    for (auto [a, b] : g.edges()) {
        Monomial m = Monomial::one(ring.size());
        m.exponent(a) = 1;
        m.exponent(b) = 1;
        gens.push_back(m);
    }
    return MonomialIdeal::make(std::move(ring), std::move(gens));
}

namespace {

MonomialIdeal cover_ideal_from_covers(const Graph& g) {
    Ring ring = Ring::of_graph(g);
    std::vector<Monomial> gens;
    for (const auto& c : minimal_vertex_covers(g)) {
        Monomial m = Monomial::one(ring.size());
        c.for_each([&](std::size_t v) { m.exponent(v) = 1; });
        gens.push_back(m);
    }
    return MonomialIdeal::make(std::move(ring), std::move(gens));
}

MonomialIdeal edge_prime_power_intersection(const Graph& g, int k) {
    Ring ring = Ring::of_graph(g);
    MonomialIdeal result = MonomialIdeal::unit(ring);
    for (auto [a, b] : g.edges()) {
        std::vector<Monomial> gens;
        for (int t = 0; t <= k; ++t) {
            Monomial m = Monomial::one(ring.size());
            m.exponent(a) = static_cast<std::uint32_t>(t);
            m.exponent(b) = static_cast<std::uint32_t>(k - t);
            gens.push_back(m);
        }
        result = intersect(result, MonomialIdeal::make(ring, std::move(gens)));
    }
    return result;
}

} // namespace

MonomialIdeal cover_ideal(const Graph& g) {
    MonomialIdeal covers = cover_ideal_from_covers(g);
#ifndef NDEBUG
    assert(covers == edge_prime_power_intersection(g, 1));
#endif
    return covers;
}

MonomialIdeal symbolic_power_cover(const Graph& g, int k) {
    if (k < 1) throw domain_error("symbolic power needs k >= 1");
    return edge_prime_power_intersection(g, k);
}

MonomialIdeal alexander_dual(const MonomialIdeal& a) {
    if (!a.is_squarefree()) throw domain_error("Alexander dual needs a squarefree ideal");
    if (a.is_unit()) return MonomialIdeal::zero(a.ring());
    MonomialIdeal result = MonomialIdeal::unit(a.ring());
    for (const auto& g : a.generators()) {
        std::vector<Monomial> prime;
        for (std::size_t i = 0; i < a.ring().size(); ++i)
            if (g.exponent(i)) prime.push_back(Monomial::variable(a.ring().size(), i));
        result = intersect(result, MonomialIdeal::make(a.ring(), std::move(prime)));
    }
    return result;
}

Polarization polarize(const MonomialIdeal& a) {
    std::size_t n = a.ring().size();
    std::vector<std::uint32_t> max_exp(n, 0);
    for (const auto& g : a.generators())
        for (std::size_t i = 0; i < n; ++i) max_exp[i] = std::max(max_exp[i], g.exponent(i));

    Polarization out;
    std::vector<std::string> vars;
    std::vector<std::size_t> offset(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        offset[i] = vars.size();
        for (std::uint32_t p = 1; p <= max_exp[i]; ++p) {
            vars.push_back(a.ring().vars[i] + "_" + std::to_string(p));
            out.var_map.emplace_back(i, p);
        }
    }
    Ring pol_ring{std::move(vars)};
    std::vector<Monomial> gens;
    for (const auto& g : a.generators()) {
        Monomial m = Monomial::one(pol_ring.size());
        for (std::size_t i = 0; i < n; ++i)
            for (std::uint32_t p = 0; p < g.exponent(i); ++p) m.exponent(offset[i] + p) = 1;
        gens.push_back(m);
    }
    out.ideal = MonomialIdeal::make(std::move(pol_ring), std::move(gens));
    return out;
}

std::uint64_t deg_max(const MonomialIdeal& a) {
    if (a.is_zero()) throw domain_error("deg_max of the zero ideal");
    std::uint64_t d = 0;
    for (const auto& g : a.generators()) d = std::max(d, g.degree());
    return d;
}

namespace {

void enumerate_multiples(const Monomial& base, std::uint64_t extra, std::size_t var,
                         Monomial& cur, std::vector<Monomial>& out) {
    if (extra == 0) {
        out.push_back(cur);
        return;
    }
    if (var == base.nvars()) return;
    for (std::uint64_t t = 0; t <= extra; ++t) {
        cur.exponent(var) += static_cast<std::uint32_t>(t);
        enumerate_multiples(base, extra - t, var + 1, cur, out);
        cur.exponent(var) -= static_cast<std::uint32_t>(t);
    }
}

} // namespace

MonomialIdeal truncation(const MonomialIdeal& a, std::uint64_t d) {
    std::vector<Monomial> gens;
    for (const auto& g : a.generators()) {
        if (g.degree() > d) continue;
        Monomial cur = g;
        enumerate_multiples(g, d - g.degree(), 0, cur, gens);
    }
    return MonomialIdeal::make(a.ring(), std::move(gens));
}

MonomialIdeal embed(const MonomialIdeal& a, const Ring& target) {
    std::vector<std::size_t> map(a.ring().size());
    for (std::size_t i = 0; i < a.ring().size(); ++i) map[i] = target.index_of(a.ring().vars[i]);
    std::vector<Monomial> gens;
    for (const auto& g : a.generators()) {
        Monomial m = Monomial::one(target.size());
        for (std::size_t i = 0; i < a.ring().size(); ++i) m.exponent(map[i]) = g.exponent(i);
        gens.push_back(m);
    }
    return MonomialIdeal::make(target, std::move(gens));
}

std::string render_monomial(const Monomial& m, const Ring& ring) {
    std::string out;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        if (!m.exponent(i)) continue;
        if (!out.empty()) out += "*";
        out += ring.vars[i];
        if (m.exponent(i) > 1) out += "^" + std::to_string(m.exponent(i));
    }
    return out.empty() ? "1" : out;
}

std::string render_ideal(const MonomialIdeal& a) {
    if (a.is_zero()) return "(0)";
    std::string out = "(";
    for (std::size_t i = 0; i < a.generator_count(); ++i) {
        if (i) out += ", ";
        out += render_monomial(a.generators()[i], a.ring());
    }
    return out + ")";
}

} // namespace cvi
