#ifndef CLAWTOP_VERTEX_SET_HPP
#define CLAWTOP_VERTEX_SET_HPP

#include <bit>
#include <cstdint>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace clawtop {

/// Subset of a fixed vertex universe {0,...,n-1}, stored as a bit array.
/// Graphs at desk scale fit in one 64-bit word; larger universes spill
/// into further words transparently.
class VertexSet {
public:
    VertexSet() : universe_(0) {}
    explicit VertexSet(int universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    VertexSet(int universe, std::initializer_list<int> vs) : VertexSet(universe) {
        for (int v : vs) set(v);
    }

    int universe() const { return universe_; }
    bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
    void set(int v) { words_[v >> 6] |= uint64_t{1} << (v & 63); }
    void reset(int v) { words_[v >> 6] &= ~(uint64_t{1} << (v & 63)); }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (uint64_t w : words_) if (w) return false;
        return true;
    }

    /// Smallest member, or -1 when empty.
    int min() const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return int(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }
    /// Largest member, or -1 when empty.
    int max() const {
        for (size_t i = words_.size(); i-- > 0;)
            if (words_[i]) return int(i * 64 + 63 - std::countl_zero(words_[i]));
        return -1;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool intersects(const VertexSet& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    bool subset_of(const VertexSet& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool operator==(const VertexSet& o) const = default;

    /// Lexicographic order on the ascending member tuples, e.g.
    /// {0} < {0,1} < {0,2} < {1}.  Used for deterministic face ordering.
    bool lex_less(const VertexSet& o) const {
        for (size_t i = 0; i < words_.size(); ++i) {
            uint64_t diff = words_[i] ^ o.words_[i];
            if (!diff) continue;
            // m = smallest vertex lying in exactly one of the two sets;
            // everything below m is shared, so the tuples agree up to m.
            int bitpos = std::countr_zero(diff);
            uint64_t above = (~uint64_t{0} << bitpos) << 1;
            bool mine = (words_[i] >> bitpos) & 1u;
            const std::vector<uint64_t>& other = mine ? o.words_ : words_;
            bool other_has_greater = (other[i] & above) != 0;
            for (size_t j = i + 1; j < words_.size() && !other_has_greater; ++j)
                other_has_greater = other[j] != 0;
            // If m is ours, we win unless the other side already ended
            // (then it is our proper prefix).  Symmetrically otherwise.
            return mine ? other_has_greater : !other_has_greater;
        }
        return false;
    }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(count());
        for (size_t i = 0; i < words_.size(); ++i) {
            uint64_t w = words_[i];
            while (w) {
                out.push_back(int(i * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (size_t i = 0; i < words_.size(); ++i) {
            uint64_t w = words_[i];
            while (w) {
                f(int(i * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    size_t hash() const {
        uint64_t h = 1469598103934665603ull;
        for (uint64_t w : words_) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return size_t(h ^ uint64_t(universe_));
    }

    const std::vector<uint64_t>& words() const { return words_; }

private:
    int universe_;
    std::vector<uint64_t> words_;
};

struct VertexSetHash {
    size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace clawtop

#endif
