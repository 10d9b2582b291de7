// Compiled with -mavx2 -mpopcnt. Only reached through the dispatch table
// after a runtime CPU check, so nothing here may be inlined into generic code.

#include "fca/simd/kernels.hpp"

#include <immintrin.h>

#include <bit>

namespace fca::simd {

namespace {

inline __m256i load(const Word* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline void store(Word* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

// Nibble-table popcount (Mula et al.): per-byte counts via pshufb, then
// horizontal byte sums into four 64-bit lanes with psadbw.
inline __m256i popcount_lanes(__m256i v) {
    const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                            0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    const __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
    return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

inline std::size_t hsum(__m256i acc) {
    return static_cast<std::size_t>(_mm256_extract_epi64(acc, 0) + _mm256_extract_epi64(acc, 1) +
                                    _mm256_extract_epi64(acc, 2) + _mm256_extract_epi64(acc, 3));
}

void and_assign(Word* dst, const Word* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) store(dst + i, _mm256_and_si256(load(dst + i), load(src + i)));
    for (; i < n; ++i) dst[i] &= src[i];
}

void andnot_assign(Word* dst, const Word* src, std::size_t n) {
    std::size_t i = 0;
    // _mm256_andnot_si256(x, y) = ~x & y
    for (; i + 4 <= n; i += 4) store(dst + i, _mm256_andnot_si256(load(src + i), load(dst + i)));
    for (; i < n; ++i) dst[i] &= ~src[i];
}

void or_assign(Word* dst, const Word* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) store(dst + i, _mm256_or_si256(load(dst + i), load(src + i)));
    for (; i < n; ++i) dst[i] |= src[i];
}

std::size_t and_popcount(Word* dst, const Word* a, const Word* b, std::size_t n) {
    std::size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; i + 4 <= n; i += 4) {
        const __m256i v = _mm256_and_si256(load(a + i), load(b + i));
        store(dst + i, v);
        acc = _mm256_add_epi64(acc, popcount_lanes(v));
    }
    std::size_t total = hsum(acc);
    for (; i < n; ++i) {
        dst[i] = a[i] & b[i];
        total += static_cast<std::size_t>(std::popcount(dst[i]));
    }
    return total;
}

bool is_subset(const Word* a, const Word* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        if (!_mm256_testz_si256(_mm256_andnot_si256(load(b + i), load(a + i)), _mm256_set1_epi64x(-1))) return false;
    for (; i < n; ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

bool equal(const Word* a, const Word* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i diff = _mm256_xor_si256(load(a + i), load(b + i));
        if (!_mm256_testz_si256(diff, diff)) return false;
    }
    for (; i < n; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

std::size_t popcount(const Word* a, std::size_t n) {
    std::size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; i + 4 <= n; i += 4) acc = _mm256_add_epi64(acc, popcount_lanes(load(a + i)));
    std::size_t total = hsum(acc);
    for (; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
    return total;
}

constexpr KernelTable kAvx2{
    Isa::Avx2, "avx2", and_assign, andnot_assign, or_assign, and_popcount, is_subset, equal, popcount,
};

}  // namespace

const KernelTable& avx2_kernel_table() { return kAvx2; }

}  // namespace fca::simd
