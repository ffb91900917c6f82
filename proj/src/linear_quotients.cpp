#include "coverideal/homological.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_set>

namespace cvi {

namespace {

using Clock = std::chrono::steady_clock;

struct LQSearch {
    const std::vector<Monomial>& gens;
    Budget budget;
    Clock::time_point start;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;
    std::vector<std::size_t> order;
    std::vector<std::size_t> by_degree; // candidate order: degree asc, then index
    std::unordered_set<VertexSet, VertexSetHash> failed; // prefix sets with no completion

    explicit LQSearch(const std::vector<Monomial>& g, const Budget& b)
        : gens(g), budget(b), start(Clock::now()) {
        by_degree.resize(gens.size());
        for (std::size_t i = 0; i < gens.size(); ++i) by_degree[i] = i;
        std::stable_sort(by_degree.begin(), by_degree.end(), [&](std::size_t a, std::size_t b2) {
            return gens[a].degree() < gens[b2].degree();
        });
    }

    bool spent() {
        ++nodes;
        if (nodes > budget.max_nodes) return out_of_budget = true;
        if ((nodes & 1023) == 0) {
            double secs = std::chrono::duration<double>(Clock::now() - start).count();
            if (secs > budget.max_seconds) return out_of_budget = true;
        }
        return false;
    }

    /// u is addable after the chosen prefix iff for every chosen v some
    /// chosen w has w/gcd(w,u) a single variable dividing v/gcd(v,u); this
    /// depends only on the prefix as a set.
    bool addable(std::size_t u) const {
        const Monomial& mu = gens[u];
        for (std::size_t v : order) {
            Monomial qv = gens[v].colon_quotient(mu);
            if (qv.degree() <= 1) continue; // v's own colon term already linear
            bool covered = false;
            for (std::size_t w : order) {
                Monomial qw = gens[w].colon_quotient(mu);
                if (qw.degree() == 1 && qw.divides(qv)) {
                    covered = true;
                    break;
                }
            }
            if (!covered) return false;
        }
        return true;
    }

    bool dfs(VertexSet& chosen) {
        if (spent()) return false;
        if (order.size() == gens.size()) return true;
        if (failed.count(chosen)) return false;
        for (std::size_t u : by_degree) {
            if (chosen.test(u) || !addable(u)) continue;
            chosen.set(u);
            order.push_back(u);
            if (dfs(chosen)) return true;
            if (out_of_budget) return false;
            order.pop_back();
            chosen.reset(u);
        }
        failed.insert(chosen);
        return false;
    }
};

std::vector<std::size_t> colon_variable_indices(const MonomialIdeal& a,
                                                const std::vector<std::size_t>& order,
                                                std::size_t step) {
    std::vector<Monomial> prefix;
    for (std::size_t t = 0; t < step; ++t) prefix.push_back(a.generators()[order[t]]);
    MonomialIdeal colon =
        colon_by_monomial(MonomialIdeal::make(a.ring(), std::move(prefix)), a.generators()[order[step]]);
    std::vector<std::size_t> vars;
    for (const auto& q : colon.generators()) {
        if (q.degree() != 1) throw domain_error("prefix colon is not variable-generated");
        vars.push_back(q.support(a.ring().size()).indices().front());
    }
    std::sort(vars.begin(), vars.end());
    return vars;
}

} // namespace

LinearQuotientCertificate linear_quotients_order(const MonomialIdeal& a, const Budget& budget) {
    LinearQuotientCertificate cert;
    if (a.is_zero() || a.generator_count() == 1) {
        cert.outcome = Outcome::certified;
        if (!a.is_zero()) {
            cert.order = {0};
            cert.colon_vars = {{}};
        }
        cert.nodes_explored = 1;
        return cert;
    }
    LQSearch search(a.generators(), budget);
    VertexSet chosen(a.generator_count());
    bool found = search.dfs(chosen);
    cert.nodes_explored = search.nodes;
    if (search.out_of_budget) {
        cert.outcome = Outcome::budget_exceeded;
        return cert;
    }
    if (!found) {
        cert.outcome = Outcome::refuted;
        return cert;
    }
    cert.outcome = Outcome::certified;
    cert.order = search.order;
    for (std::size_t step = 0; step < cert.order.size(); ++step)
        cert.colon_vars.push_back(colon_variable_indices(a, cert.order, step));
    return cert;
}

bool validate_linear_quotients(const MonomialIdeal& a, const LinearQuotientCertificate& cert) {
    if (cert.outcome != Outcome::certified) return false;
    if (cert.order.size() != a.generator_count() || cert.colon_vars.size() != cert.order.size())
        return false;
    std::vector<bool> seen(a.generator_count(), false);
    for (std::size_t u : cert.order) {
        if (u >= a.generator_count() || seen[u]) return false;
        seen[u] = true;
    }
    try {
        for (std::size_t step = 0; step < cert.order.size(); ++step)
            if (colon_variable_indices(a, cert.order, step) != cert.colon_vars[step]) return false;
    } catch (const domain_error&) {
        return false;
    }
    return true;
}

BettiTable betti_from_linear_quotients(const MonomialIdeal& a,
                                       const LinearQuotientCertificate& cert, int p) {
    if (!validate_linear_quotients(a, cert)) throw domain_error("invalid linear-quotients certificate");
    BettiTable table(p);
    for (std::size_t step = 0; step < cert.order.size(); ++step) {
        std::uint64_t r = cert.colon_vars[step].size();
        std::uint64_t deg = a.generators()[cert.order[step]].degree();
        std::uint64_t binom = 1;
        for (std::uint64_t i = 0; i <= r; ++i) {
            table.add(static_cast<int>(i), deg + i, binom);
            if (i < r) binom = binom * (r - i) / (i + 1);
        }
    }
    return table;
}

} // namespace cvi
