#include "fca/simd/kernels.hpp"

#include <bit>

namespace fca::simd {
namespace {

void and_assign(Word* dst, const Word* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] &= src[i];
}

void andnot_assign(Word* dst, const Word* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] &= ~src[i];
}

void or_assign(Word* dst, const Word* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] |= src[i];
}

std::size_t and_popcount(Word* dst, const Word* a, const Word* b, std::size_t n) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        dst[i] = a[i] & b[i];
        total += static_cast<std::size_t>(std::popcount(dst[i]));
    }
    return total;
}

bool is_subset(const Word* a, const Word* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

bool equal(const Word* a, const Word* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

std::size_t popcount(const Word* a, std::size_t n) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
    return total;
}

constexpr KernelTable kScalar{
    Isa::Scalar, "scalar", and_assign, andnot_assign, or_assign, and_popcount, is_subset, equal, popcount,
};

}  // namespace

const KernelTable& scalar_kernels() { return kScalar; }

}  // namespace fca::simd
