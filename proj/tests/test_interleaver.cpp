#include <set>

#include "doctest.h"
#include "zipper/analysis.hpp"
#include "zipper/channel.hpp"
#include "zipper/interleaver.hpp"

using namespace zipper;

TEST_CASE("staircase map formula") {
    InterleaverMap map(MapFamily::Staircase, 4);
    CHECK(map.n() == 8);
    CHECK(map.m() == 4);
    CHECK(map.period() == 4);
    CHECK(map.phi(4, 0) == Pos{0, 4});
    CHECK(map.phi(7, 3) == Pos{3, 7});
    for (std::int64_t i = 0; i < 3 * 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(map.phi_row(i, j) < i);
}

TEST_CASE("chevron map formula") {
    InterleaverMap map(MapFamily::Chevron, 4);
    CHECK(map.n() == 12);
    CHECK(map.m() == 8);
    CHECK(map.phi(13, 2) == Pos{2, 10});
    CHECK(map.phi(13, 5) == Pos{10, 9});
    // both branches are row-shift invariant, so the period is 1
    CHECK(map.period() == 1);
    for (std::int64_t i = 0; i < 12; ++i)
        for (int j = 0; j < 8; ++j) {
            const Pos a = map.phi(i + 1, j);
            const Pos b = map.phi(i, j);
            CHECK(a.row == b.row + 1);
            CHECK(a.col == b.col);
        }
}

TEST_CASE("half-chevron map formula") {
    InterleaverMap map(MapFamily::HalfChevron, 2);
    CHECK(map.n() == 10);
    CHECK(map.m() == 6);
    CHECK(map.phi(10, 1) == Pos{0, 7});
    CHECK(map.phi(10, 3) == Pos{7, 7});
}

TEST_CASE("half-chevron preimage multiplicity split") {
    const int mp = 3;
    InterleaverMap map(MapFamily::HalfChevron, mp);
    Pos pre[2];
    for (int j = 3 * mp; j < 4 * mp; ++j) CHECK(map.phi_inverse(0, j, pre) == 2);
    for (int j = 4 * mp; j < 5 * mp; ++j) CHECK(map.phi_inverse(0, j, pre) == 1);
}

TEST_CASE("phi_inverse closed forms") {
    SUBCASE("staircase") {
        InterleaverMap map(MapFamily::Staircase, 4);
        Pos pre[2];
        REQUIRE(map.phi_inverse(2, 4, pre) == 1);
        CHECK(pre[0] == Pos{4, 2});
    }
    SUBCASE("chevron") {
        InterleaverMap map(MapFamily::Chevron, 4);
        Pos pre[2];
        REQUIRE(map.phi_inverse(2, 10, pre) == 2);
        CHECK((pre[0] == Pos{13, 2} || pre[1] == Pos{13, 2}));
    }
}

TEST_CASE("map contract verification (causality, periodicity, inverse)") {
    for (int param : {1, 2, 4, 7}) {
        for (MapFamily fam :
             {MapFamily::Staircase, MapFamily::Chevron, MapFamily::HalfChevron}) {
            InterleaverMap map(fam, param);
            std::string msg;
            const bool ok = analysis::verify_map(
                map, 2 * (map.period() + map.memory_rows()), &msg);
            INFO(family_name(fam), " param=", param, ": ", msg);
            CHECK(ok);
        }
    }
}

TEST_CASE("memory size closed forms vs brute force") {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const int mbar = 8 + 2 * static_cast<int>(rng.next() % 120);
        CHECK(InterleaverMap::for_real_width(MapFamily::Staircase, mbar)
                  .memory_rows() == 2 * mbar - 1);
        CHECK(InterleaverMap::for_real_width(MapFamily::Chevron, mbar)
                  .memory_rows() == 3 * mbar);
        CHECK(InterleaverMap::for_real_width(MapFamily::HalfChevron, mbar)
                  .memory_rows() == 5 * mbar / 2);
    }
}

TEST_CASE("degree histograms") {
    auto stc = InterleaverMap::for_real_width(MapFamily::Staircase, 12)
                   .degree_histogram();
    REQUIRE(stc.size() == 1);
    CHECK(stc.at(2) == 12 * 12);

    auto chev = InterleaverMap::for_real_width(MapFamily::Chevron, 12)
                    .degree_histogram();
    REQUIRE(chev.size() == 1);
    CHECK(chev.at(3) == 12);

    auto half = InterleaverMap::for_real_width(MapFamily::HalfChevron, 12)
                    .degree_histogram();
    REQUIRE(half.size() == 2);
    CHECK(half.at(2) == half.at(3));
}

TEST_CASE("invalid parameters") {
    CHECK_THROWS(InterleaverMap(MapFamily::Staircase, 0));
    CHECK_THROWS(InterleaverMap::for_real_width(MapFamily::HalfChevron, 125));
    CHECK_THROWS(family_from_name("diagonal"));
}
