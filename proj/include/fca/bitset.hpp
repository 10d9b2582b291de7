#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "fca/simd/kernels.hpp"

namespace fca {

/// Fixed-universe bit set over the indices [0, universe).
///
/// `Tag` keeps object sets and attribute sets apart at compile time; the two
/// never mix in a derivation. Bits at or above `universe` are always zero.
/// Storage is inline up to 256 bits, which covers the attribute side of every
/// desk-scale dataset without touching the heap.
template <typename Tag>
class IndexSet {
public:
    using Word = simd::Word;
    using Storage = boost::container::small_vector<Word, 4>;

    IndexSet() = default;
    explicit IndexSet(std::size_t universe) : universe_(universe), words_(word_count(universe), Word{0}) {}

    static IndexSet full(std::size_t universe) {
        IndexSet s(universe);
        std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
        s.trim();
        return s;
    }

    static IndexSet of(std::size_t universe, std::initializer_list<std::size_t> members) {
        IndexSet s(universe);
        for (std::size_t i : members) s.insert(i);
        return s;
    }

    template <typename Range>
    static IndexSet from_range(std::size_t universe, const Range& members) {
        IndexSet s(universe);
        for (std::size_t i : members) s.insert(i);
        return s;
    }

    static constexpr std::size_t word_count(std::size_t universe) {
        return (universe + simd::kWordBits - 1) / simd::kWordBits;
    }

    std::size_t universe() const { return universe_; }
    std::size_t word_count() const { return words_.size(); }
    std::span<const Word> words() const { return {words_.data(), words_.size()}; }
    std::span<Word> words() { return {words_.data(), words_.size()}; }

    bool contains(std::size_t i) const {
        assert(i < universe_);
        return (words_[i / simd::kWordBits] >> (i % simd::kWordBits)) & 1U;
    }
    void insert(std::size_t i) {
        assert(i < universe_);
        words_[i / simd::kWordBits] |= Word{1} << (i % simd::kWordBits);
    }
    void erase(std::size_t i) {
        assert(i < universe_);
        words_[i / simd::kWordBits] &= ~(Word{1} << (i % simd::kWordBits));
    }
    void clear() { std::fill(words_.begin(), words_.end(), Word{0}); }

    std::size_t count() const {
        if (words_.size() == 1) return static_cast<std::size_t>(std::popcount(words_[0]));
        return simd::active_kernels().popcount(words_.data(), words_.size());
    }
    bool none() const {
        return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
    }
    bool any() const { return !none(); }

    IndexSet& operator&=(const IndexSet& o) {
        assert(universe_ == o.universe_);
        if (words_.size() == 1)
            words_[0] &= o.words_[0];
        else
            simd::active_kernels().and_assign(words_.data(), o.words_.data(), words_.size());
        return *this;
    }
    IndexSet& operator|=(const IndexSet& o) {
        assert(universe_ == o.universe_);
        if (words_.size() == 1)
            words_[0] |= o.words_[0];
        else
            simd::active_kernels().or_assign(words_.data(), o.words_.data(), words_.size());
        return *this;
    }
    // set difference
    IndexSet& operator-=(const IndexSet& o) {
        assert(universe_ == o.universe_);
        if (words_.size() == 1)
            words_[0] &= ~o.words_[0];
        else
            simd::active_kernels().andnot_assign(words_.data(), o.words_.data(), words_.size());
        return *this;
    }
    friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
    friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
    friend IndexSet operator-(IndexSet a, const IndexSet& b) { return a -= b; }

    bool is_subset_of(const IndexSet& o) const {
        assert(universe_ == o.universe_);
        if (words_.size() == 1) return (words_[0] & ~o.words_[0]) == 0;
        return simd::active_kernels().is_subset(words_.data(), o.words_.data(), words_.size());
    }
    bool is_proper_subset_of(const IndexSet& o) const { return is_subset_of(o) && !(*this == o); }
    bool intersects(const IndexSet& o) const {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    friend bool operator==(const IndexSet& a, const IndexSet& b) {
        if (a.universe_ != b.universe_) return false;
        if (a.words_.size() == 1) return a.words_[0] == b.words_[0];
        return simd::active_kernels().equal(a.words_.data(), b.words_.data(), a.words_.size());
    }

    /// Calls f(index) for every member in increasing order.
    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            Word bits = words_[w];
            while (bits) {
                const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
                f(w * simd::kWordBits + bit);
                bits &= bits - 1;
            }
        }
    }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    std::size_t hash() const {
        std::size_t h = universe_;
        for (Word w : words_) h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

private:
    void trim() {
        if (const std::size_t tail = universe_ % simd::kWordBits; tail != 0 && !words_.empty())
            words_.back() &= (Word{1} << tail) - 1;
    }

    std::size_t universe_ = 0;
    Storage words_;
};

/// Lectic order: a < b iff the smallest index in which they differ is in b.
template <typename Tag>
bool lectic_less(const IndexSet<Tag>& a, const IndexSet<Tag>& b) {
    assert(a.universe() == b.universe());
    const auto wa = a.words();
    const auto wb = b.words();
    for (std::size_t i = 0; i < wa.size(); ++i) {
        if (const auto diff = wa[i] ^ wb[i]; diff != 0) return (wb[i] & (diff & (~diff + 1))) != 0;
    }
    return false;
}

/// Size first, then lexicographic comparison of the sorted member lists.
template <typename Tag>
bool size_lex_less(const IndexSet<Tag>& a, const IndexSet<Tag>& b) {
    const std::size_t ca = a.count();
    const std::size_t cb = b.count();
    if (ca != cb) return ca < cb;
    // Equal sizes: the set holding the lowest differing index sorts first.
    return lectic_less(b, a);
}

struct IndexSetHash {
    template <typename Tag>
    std::size_t operator()(const IndexSet<Tag>& s) const {
        return s.hash();
    }
};

struct AttributeTag {};
struct ObjectTag {};

using AttrSet = IndexSet<AttributeTag>;
using ObjSet = IndexSet<ObjectTag>;

}  // namespace fca
