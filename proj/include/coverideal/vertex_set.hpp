#ifndef COVERIDEAL_VERTEX_SET_HPP
#define COVERIDEAL_VERTEX_SET_HPP

#include <bit>
#include <cstdint>
#include <cstddef>
#include <functional>
#include <vector>

#include "coverideal/errors.hpp"

namespace cvi {

/// Subset of the vertices of a fixed graph, stored as a bitmask.
///
/// The universe size is fixed at construction. Graphs with at most 64
/// vertices use a single word; larger universes fall back to a word vector.
/// All binary operations require equal universes.
class VertexSet {
public:
    VertexSet() : n_(0) {}

    explicit VertexSet(std::size_t universe) : n_(universe), words_(word_count(universe), 0) {}

    static VertexSet single(std::size_t universe, std::size_t v) {
        VertexSet s(universe);
        s.set(v);
        return s;
    }

    static VertexSet full(std::size_t universe) {
        VertexSet s(universe);
        for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    static VertexSet from_word(std::size_t universe, std::uint64_t mask) {
        VertexSet s(universe);
        if (!s.words_.empty()) s.words_[0] = mask;
        s.trim();
        return s;
    }

    std::size_t universe() const { return n_; }

    bool test(std::size_t i) const {
        check_index(i);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(std::size_t i) {
        check_index(i);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void reset(std::size_t i) {
        check_index(i);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool subset_of(const VertexSet& o) const {
        check_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        check_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    VertexSet operator|(const VertexSet& o) const {
        check_universe(o);
        VertexSet r(n_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | o.words_[i];
        return r;
    }

    VertexSet operator&(const VertexSet& o) const {
        check_universe(o);
        VertexSet r(n_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
        return r;
    }

    /// Set difference: elements of *this not in o.
    VertexSet minus(const VertexSet& o) const {
        check_universe(o);
        VertexSet r(n_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & ~o.words_[i];
        return r;
    }

    VertexSet complement() const {
        VertexSet r(n_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
        r.trim();
        return r;
    }

    VertexSet& operator|=(const VertexSet& o) { return *this = *this | o; }
    VertexSet& operator&=(const VertexSet& o) { return *this = *this & o; }

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && words_ == o.words_; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    /// Numeric order of the bitmask value; the deterministic output order
    /// used for enumeration results.
    bool mask_less(const VertexSet& o) const {
        check_universe(o);
        for (std::size_t i = words_.size(); i-- > 0;) {
            if (words_[i] != o.words_[i]) return words_[i] < o.words_[i];
        }
        return false;
    }

    /// Calls f(v) for each member in ascending vertex order.
    template <class F>
    void for_each(F f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                std::size_t v = (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
                f(v);
                w &= w - 1;
            }
        }
    }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t v) { out.push_back(v); });
        return out;
    }

    /// Low 64 bits; the fast path when the universe fits one word.
    std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

    std::size_t hash() const {
        std::size_t h = 0xcbf29ce484222325ull;
        for (auto w : words_) {
            h ^= static_cast<std::size_t>(w);
            h *= 0x100000001b3ull;
        }
        return h;
    }

private:
    static std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

    void check_index(std::size_t i) const {
        if (i >= n_) throw domain_error("vertex index out of range");
    }

    void check_universe(const VertexSet& o) const {
        if (n_ != o.n_) throw domain_error("vertex sets over different graphs");
    }

    void trim() {
        if (n_ % 64 != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
    }

    std::size_t n_;
    std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

} // namespace cvi

#endif
