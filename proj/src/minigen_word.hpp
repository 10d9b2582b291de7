#pragma once

#include <array>
#include <bit>
#include <utility>

#include "fca/lattice.hpp"

namespace fca::detail {

// Partial generators as bitmasks in a fixed buffer; a full buffer sends the
// concept down the generic path.
struct MaskList {
    static constexpr std::size_t kCapacity = 64;
    // Left uninitialized on purpose (it sits on the hot path); users set n first.
    std::array<simd::Word, kCapacity> items;
    std::size_t n;

    bool push(simd::Word w) {
        if (n == kCapacity) return false;
        items[n++] = w;
        return true;
    }
    simd::Word* begin() { return items.data(); }
    simd::Word* end() { return items.data() + n; }
    const simd::Word* begin() const { return items.data(); }
    const simd::Word* end() const { return items.data() + n; }
};

// Drops every set with a proper subset in the list, and repeats after the first.
// Branch-free inner loop; the lists are short.
inline void keep_minimal_masks(const MaskList& in, MaskList& out) {
    out.n = 0;
    for (std::size_t i = 0; i < in.n; ++i) {
        const simd::Word s = in.items[i];
        bool dominated = false;
        for (std::size_t j = 0; j < in.n; ++j) {
            const simd::Word t = in.items[j];
            dominated |= ((t & ~s) == 0) & ((t != s) | (j < i));
        }
        out.items[out.n] = s;
        out.n += !dominated;
    }
}

// Minigen for an intent that fits one word. The result is unsorted; nullptr
// on overflow. Needs at least one upper cover.
struct MinigenScratch {
    MaskList lists[4];
    MaskList faces;
    std::array<int, MaskList::kCapacity> face_sizes;

    MaskList* run(const ConceptLattice& lattice, ConceptId c) {
        const simd::Word b = lattice.at(c).intent.words()[0];
        MaskList* current = &lists[0];
        MaskList* next = &lists[1];
        MaskList* spare = &lists[2];
        MaskList* family = &lists[3];

        // Transversals only depend on the inclusion-minimal faces; with three
        // or more faces, reduce and take the small ones first so the partial
        // lists stay short.
        family->n = 0;
        for (ConceptId u : lattice.upper_covers(c))
            if (!family->push(b & ~lattice.at(u).intent.words()[0])) return nullptr;
        if (family->n > 2) {
            keep_minimal_masks(*family, faces);
            family = &faces;
            for (std::size_t i = 0; i < family->n; ++i) {
                const simd::Word f = family->items[i];
                const int size = std::popcount(f);
                std::size_t j = i;
                for (; j > 0 && face_sizes[j - 1] > size; --j) {
                    family->items[j] = family->items[j - 1];
                    face_sizes[j] = face_sizes[j - 1];
                }
                family->items[j] = f;
                face_sizes[j] = size;
            }
        }

        current->n = 0;
        for (simd::Word f = family->items[0]; f != 0; f &= f - 1) current->push(f & (~f + 1));
        for (std::size_t i = 1; i < family->n; ++i) {
            const simd::Word face = family->items[i];
            // Sets hitting the face stay minimal. An extension h + a can only
            // be dominated by one of them: extensions of distinct members of
            // an antichain never contain each other.
            next->n = 0;
            spare->n = 0;
            for (simd::Word h : *current) {
                if ((h & face) != 0)
                    next->items[next->n++] = h;
                else
                    spare->items[spare->n++] = h;
            }
            const std::size_t kept = next->n;
            for (simd::Word h : *spare) {
                for (simd::Word f = face; f != 0; f &= f - 1) {
                    const simd::Word candidate = h | (f & (~f + 1));
                    bool dominated = false;
                    for (std::size_t j = 0; j < kept; ++j) dominated |= (next->items[j] & ~candidate) == 0;
                    if (!dominated && !next->push(candidate)) return nullptr;
                }
            }
            std::swap(current, next);
        }
        return current;
    }
};

}  // namespace fca::detail
