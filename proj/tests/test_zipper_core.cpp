#include <vector>

#include "doctest.h"
#include "zipper/channel.hpp"
#include "zipper/zipper_core.hpp"

using namespace zipper;

namespace {

const gf::Field& field() {
    static const gf::Field f;
    return f;
}

// Encodes `rows` rows of random data and returns the buffer.
Buffer encoded_stream(const InterleaverMap& map, const BchCode& code,
                      std::int64_t rows, std::uint64_t seed) {
    Buffer buf(map.n(), rows);
    SplitMix64 rng(seed);
    const int info_bits = code.k() - map.m();
    std::vector<std::uint64_t> info(bitops::words_for_bits(info_bits));
    for (std::int64_t i = 0; i < rows; ++i) {
        for (auto& w : info) w = seed ? rng.next() : 0;
        if (info_bits % 64)
            info.back() &= ~std::uint64_t{0} >> (64 - info_bits % 64);
        encode_row(buf, map, code, info);
    }
    return buf;
}

// Consistent stream with random real bits, no code constraint. Usable with
// maps too narrow to host the 20-parity component code.
Buffer random_stream(const InterleaverMap& map, std::int64_t rows,
                     std::uint64_t seed) {
    Buffer buf(map.n(), rows);
    SplitMix64 rng(seed);
    for (std::int64_t i = 0; i < rows; ++i) {
        const std::int64_t r = buf.push_row();
        fill_virtual(buf, map, r);
        for (int j = map.m(); j < map.n(); ++j)
            if (rng.next() & 1) buf.flip({r, j});
    }
    return buf;
}

}  // namespace

TEST_CASE("zipper rate formula") {
    CHECK(ZipperParams{160, 80, 20}.rate() == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(ZipperParams{160, 80, 0}.rate() == 1.0);
    CHECK(ZipperParams{300, 200, 20}.rate() == doctest::Approx(0.80).epsilon(1e-12));
}

TEST_CASE("zero info stream encodes to the zero stream") {
    InterleaverMap map(MapFamily::Staircase, 30);
    BchCode code(field(), 2, map.n());
    Buffer buf = encoded_stream(map, code, 90, 0);
    for (std::int64_t i = 0; i < 90; ++i)
        CHECK(bitops::popcount_words(buf.row(i).data(), buf.words_per_row()) == 0);
}

TEST_CASE("encoded rows are codewords and copies are consistent") {
    for (MapFamily fam :
         {MapFamily::Staircase, MapFamily::Chevron, MapFamily::HalfChevron}) {
        InterleaverMap map = InterleaverMap::for_real_width(fam, 40);
        BchCode code(field(), 2, map.n());
        const std::int64_t rows = 4 * map.memory_rows();
        Buffer buf = encoded_stream(map, code, rows, 99);
        for (std::int64_t i = 0; i < rows; ++i) {
            CHECK(code.decode(buf.row(i).data()).status ==
                  DecodeOutcome::Status::NoError);
            for (int j = 0; j < map.m(); ++j)
                CHECK(buf.bit({i, j}) == buf.bit(map.phi(i, j)));
        }
    }
}

TEST_CASE("staircase virtual bits copy the mapped real bits") {
    // phi(4, 0) = (0, 4) for m = 4
    InterleaverMap map(MapFamily::Staircase, 4);
    Buffer buf = random_stream(map, 12, 7);
    CHECK(buf.bit({4, 0}) == buf.bit({0, 4}));
}

TEST_CASE("flip_with_copies applies the full flip set") {
    SUBCASE("staircase real bit with one copy") {
        InterleaverMap map(MapFamily::Staircase, 4);
        Buffer buf = random_stream(map, 12, 1);
        const bool before_real = buf.bit({2, 4});
        const bool before_virt = buf.bit({4, 2});
        Pos applied[3];
        const int cnt = flip_with_copies(buf, map, {2, 4}, applied);
        REQUIRE(cnt == 2);
        CHECK(buf.bit({2, 4}) == !before_real);
        CHECK(buf.bit({4, 2}) == !before_virt);
        // flipping via the virtual coordinate hits the same set
        const int cnt2 = flip_with_copies(buf, map, {4, 2}, applied);
        CHECK(cnt2 == 2);
        CHECK(buf.bit({2, 4}) == before_real);
        CHECK(buf.bit({4, 2}) == before_virt);
    }

    SUBCASE("chevron real bit has two virtual copies (deg 3)") {
        InterleaverMap map(MapFamily::Chevron, 4);
        Buffer buf = random_stream(map, 40, 2);
        Pos applied[3];
        const int cnt = flip_with_copies(buf, map, {10, 9}, applied);
        CHECK(cnt == 3);
        // copy consistency restored for every applied virtual position
        for (int c = 0; c < cnt; ++c)
            if (applied[c].col < map.m())
                CHECK(buf.bit(applied[c]) ==
                      buf.bit(map.phi(applied[c].row, applied[c].col)));
    }

    SUBCASE("copies beyond the frontier are skipped") {
        InterleaverMap map(MapFamily::Staircase, 4);
        Buffer buf = random_stream(map, 4, 1);
        Pos applied[3];
        // preimage of (2,4) lives in row 4, which has not arrived yet
        const int cnt = flip_with_copies(buf, map, {2, 4}, applied);
        CHECK(cnt == 1);
        CHECK(applied[0] == Pos{2, 4});
    }
}

TEST_CASE("buffer edge behavior") {
    Buffer buf(64, 4);
    CHECK_FALSE(buf.bit({-3, 10}));  // rows before the stream read as zero
    CHECK_THROWS(buf.row(0));        // nothing pushed yet
    buf.push_row();
    buf.push_row();
    CHECK(buf.frontier() == 2);
    CHECK_THROWS(buf.bit({5, 0}));
    buf.release_below(1);
    CHECK_THROWS(buf.row(0));
    CHECK(buf.fresh(1));
    buf.mark_decoded(1);
    CHECK_FALSE(buf.fresh(1));
    buf.flip({1, 7});
    CHECK(buf.fresh(1));
}
