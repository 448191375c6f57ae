#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace alre {

// A set of 1-indexed vertices over a fixed universe {1..n}, packed into 64-bit
// words (bit 0 stays clear). Equality, hashing and the canonical order below
// give configurations a stable identity for visited sets and witness snapshots.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : n_(universe), words_((universe + 64) / 64, 0) {
        require_internal(universe >= 0, "VertexSet: negative universe");
    }

    int universe() const { return n_; }

    bool test(int v) const { return (words_[idx(v)] >> bit(v)) & 1u; }
    void set(int v) { words_[idx(v)] |= uint64_t{1} << bit(v); }
    void reset(int v) { words_[idx(v)] &= ~(uint64_t{1} << bit(v)); }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (uint64_t w : words_) if (w) return false;
        return true;
    }

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && words_ == o.words_; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    // Canonical order: at the smallest vertex where the sets differ, the set
    // containing it sorts first. Total and deterministic for equal universes.
    static bool canonical_less(const VertexSet& a, const VertexSet& b) {
        for (std::size_t i = 0; i < a.words_.size(); ++i) {
            uint64_t diff = a.words_[i] ^ b.words_[i];
            if (diff) {
                uint64_t low = diff & (~diff + 1);
                return (a.words_[i] & low) != 0;
            }
        }
        return false;
    }

    bool is_subset_of(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    bool intersects(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& subtract(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet difference(VertexSet a, const VertexSet& b) { return a.subtract(b); }

    static int intersection_count(const VertexSet& a, const VertexSet& b) {
        int c = 0;
        for (std::size_t i = 0; i < a.words_.size(); ++i)
            c += std::popcount(a.words_[i] & b.words_[i]);
        return c;
    }

    // first() / next() iterate set bits in increasing vertex order; 0 = end.
    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return int(i * 64 + std::countr_zero(words_[i]));
        return 0;
    }
    int next(int v) const {
        int i = idx(v);
        uint64_t w = words_[i] & ~((uint64_t{2} << bit(v)) - 1);
        while (true) {
            if (w) return int(i * 64 + std::countr_zero(w));
            if (++i >= int(words_.size())) return 0;
            w = words_[i];
        }
    }
    template <class F>
    void for_each(F&& f) const {
        for (int v = first(); v != 0; v = next(v)) f(v);
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << '{';
        bool sep = false;
        for_each([&](int v) {
            if (sep) os << ' ';
            os << v;
            sep = true;
        });
        os << '}';
        return os.str();
    }

    std::size_t hash() const {
        std::size_t h = 0x9e3779b97f4a7c15ull ^ std::size_t(n_);
        for (uint64_t w : words_) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }

private:
    static int idx(int v) { return v >> 6; }
    static int bit(int v) { return v & 63; }

    int n_ = 0;
    std::vector<uint64_t> words_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

inline VertexSet make_set(int universe, std::initializer_list<int> vs) {
    VertexSet s(universe);
    for (int v : vs) s.set(v);
    return s;
}

} // namespace alre
