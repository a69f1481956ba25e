#pragma once

#include <cstddef>
#include <cstdint>

// Word-level kernels for packed bit rows. Scalar reference versions are
// always available; an AVX2 variant is selected at runtime when the CPU
// supports it. Both paths are equivalence-tested against each other.
namespace zipper::bitops {

// Number of 64-bit words needed to hold `bits` bits.
constexpr std::size_t words_for_bits(std::size_t bits) {
    return (bits + 63) / 64;
}

// dst[i] ^= src[i] for i in [0, nwords)
using xor_words_fn = void (*)(std::uint64_t* dst, const std::uint64_t* src,
                              std::size_t nwords);
// sum of popcount(words[i])
using popcount_words_fn = std::uint64_t (*)(const std::uint64_t* words,
                                            std::size_t nwords);
// sum of popcount(a[i] ^ b[i])
using diff_popcount_fn = std::uint64_t (*)(const std::uint64_t* a,
                                           const std::uint64_t* b,
                                           std::size_t nwords);

namespace scalar {
void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords);
std::uint64_t popcount_words(const std::uint64_t* words, std::size_t nwords);
std::uint64_t diff_popcount(const std::uint64_t* a, const std::uint64_t* b,
                            std::size_t nwords);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords);
std::uint64_t popcount_words(const std::uint64_t* words, std::size_t nwords);
std::uint64_t diff_popcount(const std::uint64_t* a, const std::uint64_t* b,
                            std::size_t nwords);
}  // namespace avx2
#endif

// Dispatched entry points (resolved once at startup).
extern const xor_words_fn xor_words;
extern const popcount_words_fn popcount_words;
extern const diff_popcount_fn diff_popcount;

// Name of the active backend ("scalar" or "avx2").
const char* backend_name();

// Popcount of bits [bit_begin, bit_end) within a packed row.
std::uint64_t popcount_range(const std::uint64_t* words, std::size_t bit_begin,
                             std::size_t bit_end);

inline bool get_bit(const std::uint64_t* words, std::size_t bit) {
    return (words[bit >> 6] >> (bit & 63)) & 1u;
}
inline void set_bit(std::uint64_t* words, std::size_t bit, bool v) {
    const std::uint64_t mask = std::uint64_t{1} << (bit & 63);
    if (v)
        words[bit >> 6] |= mask;
    else
        words[bit >> 6] &= ~mask;
}
inline void flip_bit(std::uint64_t* words, std::size_t bit) {
    words[bit >> 6] ^= std::uint64_t{1} << (bit & 63);
}

}  // namespace zipper::bitops
