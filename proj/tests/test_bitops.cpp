#include <bit>
#include <vector>

#include "doctest.h"
#include "zipper/bitops.hpp"
#include "zipper/channel.hpp"

using namespace zipper;

namespace {

std::vector<std::uint64_t> random_words(std::size_t n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<std::uint64_t> v(n);
    for (auto& w : v) w = rng.next();
    return v;
}

}  // namespace

TEST_CASE("dispatched kernels match scalar reference") {
    for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 16u, 65u}) {
        auto a = random_words(n, 11 + n);
        auto b = random_words(n, 77 + n);

        CHECK(bitops::popcount_words(a.data(), n) ==
              bitops::scalar::popcount_words(a.data(), n));
        CHECK(bitops::diff_popcount(a.data(), b.data(), n) ==
              bitops::scalar::diff_popcount(a.data(), b.data(), n));

        auto x1 = a, x2 = a;
        bitops::xor_words(x1.data(), b.data(), n);
        bitops::scalar::xor_words(x2.data(), b.data(), n);
        CHECK(x1 == x2);
    }
}

TEST_CASE("popcount_range against per-bit scan") {
    auto words = random_words(6, 42);
    const std::size_t total = 6 * 64;
    for (std::size_t begin : {0u, 1u, 63u, 64u, 100u}) {
        for (std::size_t end : {0u, 1u, 64u, 120u, 301u, 384u}) {
            if (end < begin) continue;
            std::uint64_t expect = 0;
            for (std::size_t i = begin; i < end && i < total; ++i)
                expect += bitops::get_bit(words.data(), i);
            CHECK(bitops::popcount_range(words.data(), begin, end) == expect);
        }
    }
}

TEST_CASE("bit accessors") {
    std::vector<std::uint64_t> w(2, 0);
    bitops::set_bit(w.data(), 3, true);
    bitops::set_bit(w.data(), 64, true);
    CHECK(bitops::get_bit(w.data(), 3));
    CHECK(bitops::get_bit(w.data(), 64));
    CHECK_FALSE(bitops::get_bit(w.data(), 4));
    bitops::flip_bit(w.data(), 3);
    CHECK_FALSE(bitops::get_bit(w.data(), 3));
    CHECK(bitops::popcount_words(w.data(), 2) == 1);
}
