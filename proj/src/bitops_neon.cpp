// NEON variants of the packed-row kernels. Compiled on aarch64 only, where
// NEON is baseline, so no runtime feature probe is needed beyond the arch.

#if defined(__aarch64__)

#include "bitops_tables.hpp"

#include <arm_neon.h>
#include <bit>

namespace netloc::bitops {

namespace {

bool and_any_neon(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const uint64x2_t v = vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
        if ((vgetq_lane_u64(v, 0) | vgetq_lane_u64(v, 1)) != 0) return true;
    }
    for (; i < n; ++i)
        if (a[i] & b[i]) return true;
    return false;
}

void and_into_neon(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* dst,
                   std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        vst1q_u64(dst + i, vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
    for (; i < n; ++i) dst[i] = a[i] & b[i];
}

std::uint64_t and_popcount_neon(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::uint64_t total = 0;
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const uint64x2_t v = vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
        total += vaddvq_u8(vcntq_u8(vreinterpretq_u8_u64(v)));
    }
    for (; i < n; ++i) total += std::popcount(a[i] & b[i]);
    return total;
}

}  // namespace

namespace detail {
const Kernels neon_kernels = {and_any_neon, and_into_neon, and_popcount_neon};
}

}  // namespace netloc::bitops

#endif  // aarch64
