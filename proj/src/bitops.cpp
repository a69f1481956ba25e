#include "zipper/bitops.hpp"

namespace zipper::bitops {

namespace {

bool have_avx2() {
#if (defined(__x86_64__) || defined(_M_X64)) && defined(__GNUC__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const bool use_avx2 = have_avx2();

}  // namespace

#if defined(__x86_64__) || defined(_M_X64)
const xor_words_fn xor_words = use_avx2 ? avx2::xor_words : scalar::xor_words;
const popcount_words_fn popcount_words =
    use_avx2 ? avx2::popcount_words : scalar::popcount_words;
const diff_popcount_fn diff_popcount =
    use_avx2 ? avx2::diff_popcount : scalar::diff_popcount;
#else
const xor_words_fn xor_words = scalar::xor_words;
const popcount_words_fn popcount_words = scalar::popcount_words;
const diff_popcount_fn diff_popcount = scalar::diff_popcount;
#endif

const char* backend_name() { return use_avx2 ? "avx2" : "scalar"; }

std::uint64_t popcount_range(const std::uint64_t* words, std::size_t bit_begin,
                             std::size_t bit_end) {
    if (bit_begin >= bit_end) return 0;
    const std::size_t w0 = bit_begin >> 6;
    const std::size_t w1 = (bit_end - 1) >> 6;
    const std::uint64_t lo_mask = ~std::uint64_t{0} << (bit_begin & 63);
    const std::uint64_t hi_mask =
        ~std::uint64_t{0} >> (63 - ((bit_end - 1) & 63));
    if (w0 == w1) {
        std::uint64_t w = words[w0] & lo_mask & hi_mask;
        return scalar::popcount_words(&w, 1);
    }
    std::uint64_t first = words[w0] & lo_mask;
    std::uint64_t last = words[w1] & hi_mask;
    std::uint64_t sum = scalar::popcount_words(&first, 1) +
                        scalar::popcount_words(&last, 1);
    if (w1 > w0 + 1) sum += popcount_words(words + w0 + 1, w1 - w0 - 1);
    return sum;
}

}  // namespace zipper::bitops
