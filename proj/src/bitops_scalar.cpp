#include "zipper/bitops.hpp"

#include <bit>

namespace zipper::bitops::scalar {

void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords) {
    for (std::size_t i = 0; i < nwords; ++i) dst[i] ^= src[i];
}

std::uint64_t popcount_words(const std::uint64_t* words, std::size_t nwords) {
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < nwords; ++i) sum += std::popcount(words[i]);
    return sum;
}

std::uint64_t diff_popcount(const std::uint64_t* a, const std::uint64_t* b,
                            std::size_t nwords) {
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < nwords; ++i) sum += std::popcount(a[i] ^ b[i]);
    return sum;
}

}  // namespace zipper::bitops::scalar
