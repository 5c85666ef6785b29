#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace netloc::bitops {

// Word-level kernels over packed 64-bit rows. The scalar table is the
// reference implementation; vector backends must produce bit-identical
// results and are equivalence-tested against it.
struct Kernels {
    // any bit set in a & b over n words
    bool (*and_any)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
    // dst = a & b over n words
    void (*and_into)(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* dst,
                     std::size_t n);
    // popcount(a & b) over n words; popcount(a) via and_popcount(a, a, n)
    std::uint64_t (*and_popcount)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
};

enum class Backend { Scalar, Avx2, Neon };

const char* backend_name(Backend b);

// Compiled in and usable on this machine.
bool backend_available(Backend b);
std::vector<Backend> available_backends();

// Best available backend, or the one forced via NETLOC_BITOPS=scalar|avx2|neon
// (an unavailable override falls back to scalar with a warning on stderr).
Backend active_backend();

const Kernels& kernels();           // table for active_backend()
const Kernels& kernels(Backend b);  // explicit table; throws if unavailable

}  // namespace netloc::bitops
