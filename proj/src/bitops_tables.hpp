#pragma once

#include "netloc/bitops.hpp"

// Internal: per-backend kernel tables, defined in their own translation units
// so vector variants can carry their own compile flags.
namespace netloc::bitops::detail {

extern const Kernels scalar_kernels;
#if defined(__x86_64__) || defined(_M_X64)
extern const Kernels avx2_kernels;
#endif
#if defined(__aarch64__)
extern const Kernels neon_kernels;
#endif

}  // namespace netloc::bitops::detail
