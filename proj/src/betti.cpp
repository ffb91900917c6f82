#include "coverideal/homological.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>
#include <thread>
#include <unordered_set>

namespace cvi {

void BettiTable::add(int i, std::uint64_t j, std::uint64_t count) {
    if (count == 0) return;
    entries_[{i, j}] += count;
}

std::uint64_t BettiTable::get(int i, std::uint64_t j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
}

int BettiTable::projective_dimension() const {
    if (entries_.empty()) throw domain_error("projective dimension of an empty Betti table");
    int m = 0;
    for (const auto& [key, beta] : entries_) m = std::max(m, key.first);
    return m;
}

std::int64_t BettiTable::regularity() const {
    if (entries_.empty()) throw domain_error("regularity of an empty Betti table");
    std::int64_t r = std::numeric_limits<std::int64_t>::min();
    for (const auto& [key, beta] : entries_)
        r = std::max(r, static_cast<std::int64_t>(key.second) - key.first);
    return r;
}

std::string BettiTable::render() const {
    if (entries_.empty()) return "(empty Betti table)\n";
    int pd = projective_dimension();
    std::int64_t dmin = std::numeric_limits<std::int64_t>::max(), dmax = regularity();
    std::vector<std::uint64_t> totals(static_cast<std::size_t>(pd) + 1, 0);
    for (const auto& [key, beta] : entries_) {
        dmin = std::min(dmin, static_cast<std::int64_t>(key.second) - key.first);
        totals[static_cast<std::size_t>(key.first)] += beta;
    }
    auto cell = [](std::uint64_t v) { return v ? std::to_string(v) : std::string("."); };
    std::size_t width = 1;
    for (auto t : totals) width = std::max(width, std::to_string(t).size());
    std::ostringstream os;
    auto row = [&](const std::string& label, const std::vector<std::string>& cells) {
        os << label;
        for (std::size_t c = 0; c < label.size() || c < 7; ++c)
            if (c >= label.size()) os << ' ';
        for (const auto& s : cells) {
            for (std::size_t c = s.size(); c < width + 1; ++c) os << ' ';
            os << s;
        }
        os << '\n';
    };
    std::vector<std::string> header, total_cells;
    for (int i = 0; i <= pd; ++i) {
        header.push_back(std::to_string(i));
        total_cells.push_back(std::to_string(totals[static_cast<std::size_t>(i)]));
    }
    row("", header);
    row("total:", total_cells);
    for (std::int64_t d = dmin; d <= dmax; ++d) {
        std::vector<std::string> cells;
        for (int i = 0; i <= pd; ++i)
            cells.push_back(cell(get(i, static_cast<std::uint64_t>(d + i))));
        row(std::to_string(d) + ":", cells);
    }
    return os.str();
}

namespace {

constexpr std::size_t kDirectVarCap = 20;
constexpr std::size_t kDualVarCap = 24;
constexpr std::size_t kDualFaceCap = std::size_t{1} << 22;

std::vector<std::uint64_t> facet_masks_of(const SimplicialComplex& c) {
    std::vector<std::uint64_t> out;
    out.reserve(c.facets.size());
    for (const auto& f : c.facets) out.push_back(f.low_word());
    return out;
}

/// Runs fn(begin, end, slot) over a partition of [0, total) and returns the
/// per-slot tables; the caller merges by addition, which is order-free.
template <class Fn>
std::vector<BettiTable> run_chunks(std::uint64_t total, unsigned threads, int p, Fn fn) {
    unsigned workers = std::max(1u, threads);
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(total, 1)));
    std::vector<BettiTable> partial(workers, BettiTable(p));
    if (workers == 1) {
        fn(std::uint64_t{0}, total, partial[0]);
        return partial;
    }
    std::vector<std::thread> pool;
    std::uint64_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        std::uint64_t b = w * chunk, e = std::min(total, b + chunk);
        pool.emplace_back([&, b, e, w] { fn(b, e, partial[w]); });
    }
    for (auto& t : pool) t.join();
    return partial;
}

BettiTable merge(std::vector<BettiTable> parts, int p) {
    BettiTable out(p);
    for (const auto& t : parts)
        for (const auto& [key, beta] : t.entries()) out.add(key.first, key.second, beta);
    return out;
}

/// Downward closure of the given faces; false if the count passes `cap`.
bool closure_faces(const std::vector<std::uint64_t>& facets, std::size_t cap,
                   std::vector<std::uint64_t>& out) {
    out.clear();
    std::unordered_set<std::uint64_t> seen(facets.begin(), facets.end());
    std::vector<std::uint64_t> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        std::vector<std::uint64_t> next;
        for (auto f : frontier) {
            out.push_back(f);
            std::uint64_t rest = f;
            while (rest) {
                std::uint64_t bit = rest & (~rest + 1);
                rest ^= bit;
                if (seen.insert(f ^ bit).second) next.push_back(f ^ bit);
            }
        }
        if (seen.size() > cap) return false;
        frontier = std::move(next);
    }
    return true;
}

/// beta_{i,j}(I) = sum over |W| = j of dim H~_{j-i-2}(restriction of the
/// Stanley-Reisner complex to W).
BettiTable hochster_direct(const MonomialIdeal& a, int p, unsigned threads) {
    std::size_t n = a.ring().size();
    if (n > kDirectVarCap) throw domain_error("direct Hochster route capped at 20 variables");
    auto facets = facet_masks_of(stanley_reisner_complex(a));
    std::uint64_t total = std::uint64_t{1} << n;
    auto parts = run_chunks(total, threads, p, [&](std::uint64_t b, std::uint64_t e, BettiTable& out) {
        std::vector<std::uint64_t> restricted;
        for (std::uint64_t w = b; w < e; ++w) {
            if (w == 0) continue; // W = ∅ only sees H~_{-1}({∅}), vacuous for an ideal
            restricted.clear();
            for (auto f : facets) restricted.push_back(f & w);
            std::sort(restricted.begin(), restricted.end());
            restricted.erase(std::unique(restricted.begin(), restricted.end()), restricted.end());
            auto h = homology_ranks(restricted, p);
            int j = std::popcount(w);
            for (std::size_t t = 0; t < h.size(); ++t) {
                if (!h[t]) continue;
                int d = static_cast<int>(t) - 1;
                int i = j - d - 2;
                if (i < 0) throw domain_error("Hochster: homology above the top dimension");
                out.add(i, static_cast<std::uint64_t>(j), h[t]);
            }
        }
    });
    return merge(std::move(parts), p);
}

/// Dual-side Hochster: beta_{i,W}(I) = dim H~^{i-1}(link of V\W in the
/// Alexander dual of the Stanley-Reisner complex), which vanishes unless
/// V\W is a face there. Only the dual faces are enumerated, so the 2^n
/// outer loop disappears for ideals with large generator supports.
BettiTable hochster_dual(const MonomialIdeal& a, int p, unsigned threads) {
    std::size_t n = a.ring().size();
    if (n > kDualVarCap) throw domain_error("dual Hochster route capped at 24 variables");
    auto facets = facet_masks_of(dual_complex(a));
    std::vector<std::uint64_t> faces;
    if (!closure_faces(facets, kDualFaceCap, faces))
        throw domain_error("dual Hochster route face cap exceeded");
    auto parts = run_chunks(faces.size(), threads, p, [&](std::uint64_t b, std::uint64_t e, BettiTable& out) {
        std::vector<std::uint64_t> link;
        for (std::uint64_t t = b; t < e; ++t) {
            std::uint64_t s = faces[t];
            link.clear();
            for (auto f : facets)
                if ((f & s) == s) link.push_back(f & ~s);
            auto h = homology_ranks(link, p);
            std::uint64_t j = n - static_cast<std::uint64_t>(std::popcount(s));
            for (std::size_t i = 0; i < h.size(); ++i)
                if (h[i]) out.add(static_cast<int>(i), j, h[i]);
        }
    });
    return merge(std::move(parts), p);
}

} // namespace

BettiTable betti_table_hochster(const MonomialIdeal& a, int p, HochsterRoute route, unsigned threads) {
    if (!a.is_squarefree()) throw domain_error("Hochster needs a squarefree ideal; polarize first");
    if (a.is_zero()) return BettiTable(p);
    if (a.is_unit()) {
        BettiTable t(p);
        t.add(0, 0, 1);
        return t;
    }
    if (route == HochsterRoute::automatic) {
        std::size_t n = a.ring().size();
        if (n > kDirectVarCap) {
            route = HochsterRoute::dual;
        } else {
            // The dual route wins when the dual complex has few faces
            // (large generator supports, e.g. cover ideals); a capped trial
            // enumeration is cheap either way.
            std::size_t trial_cap = std::max<std::size_t>((std::size_t{1} << n) / 4, 1024);
            std::vector<std::uint64_t> faces;
            route = closure_faces(facet_masks_of(dual_complex(a)), trial_cap, faces)
                        ? HochsterRoute::dual
                        : HochsterRoute::direct;
        }
    }
    return route == HochsterRoute::dual ? hochster_dual(a, p, threads) : hochster_direct(a, p, threads);
}

BettiTable betti_table(const MonomialIdeal& a, int p, HochsterRoute route, unsigned threads) {
    if (a.is_squarefree()) return betti_table_hochster(a, p, route, threads);
    // Polarization preserves graded Betti numbers by total degree.
    return betti_table_hochster(polarize(a).ideal, p, route, threads);
}

std::int64_t regularity(const MonomialIdeal& a, int p, unsigned threads) {
    if (a.is_zero()) throw domain_error("regularity of the zero ideal");
    return betti_table(a, p, HochsterRoute::automatic, threads).regularity();
}

bool has_linear_resolution(const MonomialIdeal& a, int p, unsigned threads) {
    if (a.is_zero()) throw domain_error("linear resolution of the zero ideal");
    std::uint64_t d = a.generators().front().degree();
    for (const auto& g : a.generators())
        if (g.degree() != d) return false;
    return regularity(a, p, threads) == static_cast<std::int64_t>(d);
}

bool is_componentwise_linear(const MonomialIdeal& a, int p, unsigned threads) {
    if (a.is_zero()) throw domain_error("componentwise linearity of the zero ideal");
    std::uint64_t lo = a.generators().front().degree(), hi = deg_max(a);
    for (std::uint64_t d = lo; d <= hi; ++d)
        if (!has_linear_resolution(truncation(a, d), p, threads)) return false;
    return true;
}

bool seq_cm_proxy(const Graph& g, int p, unsigned threads) {
    return is_componentwise_linear(cover_ideal(g), p, threads);
}

} // namespace cvi
