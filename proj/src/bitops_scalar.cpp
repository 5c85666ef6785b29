#include "bitops_tables.hpp"

#include <bit>

namespace netloc::bitops {

namespace {

bool and_any_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] & b[i]) return true;
    return false;
}

void and_into_scalar(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* dst,
                     std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] & b[i];
}

std::uint64_t and_popcount_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < n; ++i) total += std::popcount(a[i] & b[i]);
    return total;
}

}  // namespace

namespace detail {
const Kernels scalar_kernels = {and_any_scalar, and_into_scalar, and_popcount_scalar};
}

}  // namespace netloc::bitops
