#include "fca/simd/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string_view>

namespace fca::simd {

#if defined(FCA_HAVE_AVX2_KERNELS)
const KernelTable& avx2_kernel_table();
#endif

const KernelTable* avx2_kernels() {
#if defined(FCA_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
    static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
    return supported ? &avx2_kernel_table() : nullptr;
#else
    return nullptr;
#endif
}

namespace {

const KernelTable* resolve() {
    if (const char* forced = std::getenv("FCA_KERNELS"); forced && std::string_view(forced) == "scalar")
        return &scalar_kernels();
    if (const KernelTable* avx2 = avx2_kernels()) return avx2;
    return &scalar_kernels();
}

std::atomic<const KernelTable*>& slot() {
    static std::atomic<const KernelTable*> table{resolve()};
    return table;
}

}  // namespace

const KernelTable& active_kernels() { return *slot().load(std::memory_order_relaxed); }

bool select_kernels(Isa isa) {
    const KernelTable* table = isa == Isa::Scalar ? &scalar_kernels() : avx2_kernels();
    if (!table) return false;
    slot().store(table, std::memory_order_relaxed);
    return true;
}

}  // namespace fca::simd
