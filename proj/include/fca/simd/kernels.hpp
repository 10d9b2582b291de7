#pragma once

// Word-level bitset kernels. Every derivation, closure and stability count in
// the library bottoms out in one of these loops. A scalar reference table is
// always available; an AVX2 table is compiled separately and chosen at
// runtime when the CPU supports it. Both tables must agree bit-for-bit.

#include <cstddef>
#include <cstdint>

namespace fca::simd {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

enum class Isa { Scalar, Avx2 };

struct KernelTable {
    Isa isa;
    const char* name;
    // dst &= src
    void (*and_assign)(Word* dst, const Word* src, std::size_t n);
    // dst &= ~src
    void (*andnot_assign)(Word* dst, const Word* src, std::size_t n);
    // dst |= src
    void (*or_assign)(Word* dst, const Word* src, std::size_t n);
    // dst = a & b, returns popcount(dst)
    std::size_t (*and_popcount)(Word* dst, const Word* a, const Word* b, std::size_t n);
    // (a & ~b) == 0
    bool (*is_subset)(const Word* a, const Word* b, std::size_t n);
    bool (*equal)(const Word* a, const Word* b, std::size_t n);
    std::size_t (*popcount)(const Word* a, std::size_t n);
};

const KernelTable& scalar_kernels();

// nullptr when the AVX2 table was not compiled in or the CPU lacks AVX2.
const KernelTable* avx2_kernels();

// The table used by the library. Resolved once: the best supported ISA,
// unless the environment variable FCA_KERNELS=scalar forces the reference.
const KernelTable& active_kernels();

// Overrides the active table (benchmarks and equivalence tests).
// Returns false if the requested ISA is unavailable.
bool select_kernels(Isa isa);

}  // namespace fca::simd
