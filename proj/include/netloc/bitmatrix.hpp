#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace netloc {

// Square bit matrix with rows padded to whole 64-bit words; the packed rows
// feed the bitops kernels.
class BitMatrix {
public:
    explicit BitMatrix(std::size_t n)
        : n_(n), words_(n == 0 ? 1 : (n + 63) / 64), data_(n * words_, 0) {}

    std::size_t size() const { return n_; }
    std::size_t words_per_row() const { return words_; }

    void set(std::size_t i, std::size_t j) {
        data_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
    }
    bool test(std::size_t i, std::size_t j) const {
        return (data_[i * words_ + j / 64] >> (j % 64)) & 1u;
    }
    const std::uint64_t* row(std::size_t i) const { return data_.data() + i * words_; }

    // Zero bits [0, bit] of a packed row buffer (keep strictly higher bits).
    static void clear_bits_through(std::uint64_t* words, std::size_t bit) {
        const std::size_t w = bit / 64;
        for (std::size_t k = 0; k < w; ++k) words[k] = 0;
        const std::size_t r = bit % 64;
        const std::uint64_t mask = (r == 63) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (r + 1)) - 1);
        words[w] &= ~mask;
    }

    template <typename Fn>
    static void for_each_bit(const std::uint64_t* words, std::size_t nwords, Fn&& fn) {
        for (std::size_t w = 0; w < nwords; ++w) {
            std::uint64_t x = words[w];
            while (x) {
                fn(w * 64 + static_cast<std::size_t>(std::countr_zero(x)));
                x &= x - 1;
            }
        }
    }

private:
    std::size_t n_;
    std::size_t words_;
    std::vector<std::uint64_t> data_;
};

}  // namespace netloc
