// AVX2 variants of the packed-row kernels. Compiled with -mavx2 for this
// translation unit only; callers reach these through the runtime dispatch
// table in bitops.cpp.
#if defined(__x86_64__) || defined(_M_X64)

#include "zipper/bitops.hpp"

#include <bit>
#include <immintrin.h>

namespace zipper::bitops::avx2 {

namespace {

// Per-byte popcount via nibble shuffle, summed with sad against zero.
inline __m256i popcount_bytes(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2,
                                         3, 3, 4, 0, 1, 1, 2, 1, 2, 2, 3, 1, 2,
                                         2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low_mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    return _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo),
                           _mm256_shuffle_epi8(lut, hi));
}

inline std::uint64_t hsum_sad(__m256i acc) {
    __m256i sad = _mm256_sad_epu8(acc, _mm256_setzero_si256());
    __m128i lo = _mm256_castsi256_si128(sad);
    __m128i hi = _mm256_extracti128_si256(sad, 1);
    __m128i s = _mm_add_epi64(lo, hi);
    return static_cast<std::uint64_t>(_mm_extract_epi64(s, 0)) +
           static_cast<std::uint64_t>(_mm_extract_epi64(s, 1));
}

}  // namespace

void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords) {
    std::size_t i = 0;
    for (; i + 4 <= nwords; i += 4) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                            _mm256_xor_si256(d, s));
    }
    for (; i < nwords; ++i) dst[i] ^= src[i];
}

std::uint64_t popcount_words(const std::uint64_t* words, std::size_t nwords) {
    std::uint64_t sum = 0;
    std::size_t i = 0;
    for (; i + 4 <= nwords; i += 4) {
        __m256i v =
            _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + i));
        sum += hsum_sad(popcount_bytes(v));
    }
    for (; i < nwords; ++i) sum += std::popcount(words[i]);
    return sum;
}

std::uint64_t diff_popcount(const std::uint64_t* a, const std::uint64_t* b,
                            std::size_t nwords) {
    std::uint64_t sum = 0;
    std::size_t i = 0;
    for (; i + 4 <= nwords; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        sum += hsum_sad(popcount_bytes(_mm256_xor_si256(va, vb)));
    }
    for (; i < nwords; ++i) sum += std::popcount(a[i] ^ b[i]);
    return sum;
}

}  // namespace zipper::bitops::avx2

#endif  // x86_64
