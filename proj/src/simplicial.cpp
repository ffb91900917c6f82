#include "coverideal/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>
#include <unordered_set>

namespace cvi {

int SimplicialComplex::dimension() const {
    if (is_void()) throw domain_error("dimension of the void complex");
    std::size_t m = 0;
    for (const auto& f : facets) m = std::max(m, f.count());
    return static_cast<int>(m) - 1;
}

std::vector<VertexSet> maximal_faces(std::vector<VertexSet> faces) {
    std::sort(faces.begin(), faces.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.mask_less(b); });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<VertexSet> out;
    for (const auto& f : faces) {
        bool dominated = false;
        for (const auto& g : faces)
            if (f != g && f.subset_of(g)) {
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(f);
    }
    return out;
}

SimplicialComplex independence_complex(const Graph& g) {
    return SimplicialComplex{g.labels(), maximal_independent_sets(g)};
}

SimplicialComplex stanley_reisner_complex(const MonomialIdeal& a) {
    if (!a.is_squarefree()) throw domain_error("Stanley-Reisner complex needs a squarefree ideal");
    std::size_t n = a.ring().size();
    // Facets are the complements of the minimal generator supports of the
    // Alexander dual (= complements of the minimal transversals of a's
    // generator supports).
    std::vector<VertexSet> facets;
    MonomialIdeal dual = alexander_dual(a);
    for (const auto& u : dual.generators()) facets.push_back(u.support(n).complement());
    return SimplicialComplex{a.ring().vars, maximal_faces(std::move(facets))};
}

SimplicialComplex dual_complex(const MonomialIdeal& a) {
    if (!a.is_squarefree()) throw domain_error("dual complex needs a squarefree ideal");
    std::size_t n = a.ring().size();
    std::vector<VertexSet> facets;
    for (const auto& u : a.generators()) facets.push_back(u.support(n).complement());
    return SimplicialComplex{a.ring().vars, maximal_faces(std::move(facets))};
}

std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplex& c, int p) {
    if (c.ground.size() > 64) throw domain_error("homology ground set capped at 64 vertices");
    std::vector<std::uint64_t> masks;
    masks.reserve(c.facets.size());
    for (const auto& f : c.facets) masks.push_back(f.low_word());
    return homology_ranks(masks, p);
}

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// Rank of a sparse matrix over F_2. Rows are bitsets over `cols` columns.
std::size_t rank_gf2(std::vector<std::vector<std::uint64_t>>& rows, std::size_t cols) {
    std::size_t words = (cols + 63) / 64;
    std::vector<std::vector<std::uint64_t>> pivots(cols); // pivot row per leading column
    std::size_t rank = 0;
    for (auto& row : rows) {
        for (;;) {
            std::size_t lead = cols;
            for (std::size_t w = 0; w < words; ++w)
                if (row[w]) {
                    lead = (w << 6) + static_cast<std::size_t>(std::countr_zero(row[w]));
                    break;
                }
            if (lead == cols) break;
            if (pivots[lead].empty()) {
                pivots[lead] = std::move(row);
                ++rank;
                break;
            }
            const auto& pr = pivots[lead];
            for (std::size_t w = 0; w < words; ++w) row[w] ^= pr[w];
        }
    }
    return rank;
}

using SparseRow = std::vector<std::pair<std::uint32_t, std::uint32_t>>; // (col, value mod p), col-sorted

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    // p is prime and tiny; Fermat.
    std::uint64_t r = 1, b = a;
    for (std::uint32_t e = p - 2; e; e >>= 1, b = b * b % p)
        if (e & 1) r = r * b % p;
    return static_cast<std::uint32_t>(r);
}

/// dst -= factor * src over F_p, both col-sorted.
SparseRow axpy(const SparseRow& dst, const SparseRow& src, std::uint32_t factor, std::uint32_t p) {
    SparseRow out;
    out.reserve(dst.size() + src.size());
    std::size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            out.push_back(dst[i++]);
        } else if (i == dst.size() || src[j].first < dst[i].first) {
            std::uint32_t v = static_cast<std::uint32_t>(
                (p - static_cast<std::uint64_t>(factor) * src[j].second % p) % p);
            if (v) out.emplace_back(src[j].first, v);
            ++j;
        } else {
            std::uint64_t v = (dst[i].second + p - factor * static_cast<std::uint64_t>(src[j].second) % p) % p;
            if (v) out.emplace_back(dst[i].first, static_cast<std::uint32_t>(v));
            ++i;
            ++j;
        }
    }
    return out;
}

/// Rank of a sparse matrix over F_p via row-insertion elimination.
std::size_t rank_fp(std::vector<SparseRow>& rows, std::size_t cols, std::uint32_t p) {
    std::unordered_map<std::uint32_t, SparseRow> pivots; // leading col -> normalized row
    pivots.reserve(cols);
    std::size_t rank = 0;
    // Short rows first keeps fill-in modest.
    std::sort(rows.begin(), rows.end(),
              [](const SparseRow& a, const SparseRow& b) { return a.size() < b.size(); });
    for (auto& row : rows) {
        while (!row.empty()) {
            auto it = pivots.find(row.front().first);
            if (it == pivots.end()) {
                std::uint32_t inv = inv_mod(row.front().second, p);
                for (auto& [c, v] : row)
                    v = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v) * inv % p);
                pivots.emplace(row.front().first, std::move(row));
                ++rank;
                break;
            }
            row = axpy(row, it->second, row.front().second, p);
        }
    }
    return rank;
}

} // namespace

std::vector<std::size_t> homology_ranks(const std::vector<std::uint64_t>& facet_masks, int p) {
    if (!is_prime(p)) throw domain_error("homology coefficient field needs a prime characteristic");
    if (facet_masks.empty()) return {}; // void complex
    // Cone detection: a vertex in every facet kills all reduced homology.
    std::uint64_t common = ~std::uint64_t{0};
    int maxdim = -1;
    for (auto f : facet_masks) {
        common &= f;
        maxdim = std::max(maxdim, std::popcount(f) - 1);
    }
    if (common) return std::vector<std::size_t>(static_cast<std::size_t>(maxdim) + 2, 0);

    // Downward closure from the facets, grouped by dimension.
    std::vector<std::vector<std::uint64_t>> faces(static_cast<std::size_t>(maxdim) + 2);
    {
        std::unordered_set<std::uint64_t> seen(facet_masks.begin(), facet_masks.end());
        std::vector<std::uint64_t> frontier(seen.begin(), seen.end());
        while (!frontier.empty()) {
            std::vector<std::uint64_t> next;
            for (auto f : frontier) {
                faces[static_cast<std::size_t>(std::popcount(f))].push_back(f);
                std::uint64_t rest = f;
                while (rest) {
                    std::uint64_t bit = rest & (~rest + 1);
                    rest ^= bit;
                    if (seen.insert(f ^ bit).second) next.push_back(f ^ bit);
                }
            }
            frontier = std::move(next);
        }
    }
    for (auto& level : faces) std::sort(level.begin(), level.end());

    // ranks_bd[d+1] = rank of the boundary map C_d -> C_{d-1}.
    std::vector<std::size_t> ranks_bd(static_cast<std::size_t>(maxdim) + 3, 0);
    for (int d = 0; d <= maxdim; ++d) {
        const auto& top = faces[static_cast<std::size_t>(d) + 1];
        const auto& bot = faces[static_cast<std::size_t>(d)];
        std::unordered_map<std::uint64_t, std::uint32_t> col_of;
        col_of.reserve(bot.size());
        for (std::size_t i = 0; i < bot.size(); ++i) col_of.emplace(bot[i], static_cast<std::uint32_t>(i));
        if (p == 2) {
            std::size_t words = (bot.size() + 63) / 64;
            std::vector<std::vector<std::uint64_t>> rows;
            rows.reserve(top.size());
            for (auto f : top) {
                std::vector<std::uint64_t> row(words, 0);
                std::uint64_t rest = f;
                while (rest) {
                    std::uint64_t bit = rest & (~rest + 1);
                    rest ^= bit;
                    std::uint32_t c = col_of.at(f ^ bit);
                    row[c >> 6] ^= std::uint64_t{1} << (c & 63);
                }
                rows.push_back(std::move(row));
            }
            ranks_bd[static_cast<std::size_t>(d) + 1] = rank_gf2(rows, bot.size());
        } else {
            std::vector<SparseRow> rows;
            rows.reserve(top.size());
            auto up = static_cast<std::uint32_t>(p);
            for (auto f : top) {
                SparseRow row;
                std::uint64_t rest = f;
                std::uint32_t sign_pos = 0;
                while (rest) {
                    std::uint64_t bit = rest & (~rest + 1);
                    rest ^= bit;
                    row.emplace_back(col_of.at(f ^ bit), sign_pos % 2 == 0 ? 1u : up - 1);
                    ++sign_pos;
                }
                std::sort(row.begin(), row.end());
                rows.push_back(std::move(row));
            }
            ranks_bd[static_cast<std::size_t>(d) + 1] = rank_fp(rows, bot.size(), up);
        }
    }

    std::vector<std::size_t> out(static_cast<std::size_t>(maxdim) + 2, 0);
    for (int d = -1; d <= maxdim; ++d) {
        std::size_t dim_cd = faces[static_cast<std::size_t>(d) + 1].size();
        out[static_cast<std::size_t>(d) + 1] =
            dim_cd - ranks_bd[static_cast<std::size_t>(d) + 1] - ranks_bd[static_cast<std::size_t>(d) + 2];
    }
    return out;
}

} // namespace cvi
