#include <vector>

#include "doctest.h"
#include "zipper/simulate.hpp"
#include "zipper/zipper_core.hpp"

using namespace zipper;

namespace {

const gf::Field& field() {
    static const gf::Field f;
    return f;
}

struct Instance {
    InterleaverMap map;
    BchCode code;
    Buffer buf;

    Instance(MapFamily fam, int mbar, std::int64_t rows)
        : map(InterleaverMap::for_real_width(fam, mbar)),
          code(field(), 2, map.n()),
          buf(map.n(), rows) {}

    // error-domain ingest: rows start as all-zero codewords
    void push_clean_rows(std::int64_t count) {
        for (std::int64_t c = 0; c < count; ++c) {
            const std::int64_t i = buf.push_row();
            fill_virtual(buf, map, i);
        }
    }
};

}  // namespace

TEST_CASE("noiseless window: one round, no corrections") {
    Instance in(MapFamily::Staircase, 16, 200);
    in.push_clean_rows(150);
    WindowConfig cfg{.window_rows = 128, .max_rounds = 10, .stride = 16};
    WindowDecoder dec(in.buf, in.map, in.code, cfg);
    const auto res = dec.decode_window(149);
    CHECK(res.rounds == 1);
    CHECK(res.corrections == 0);
    CHECK(dec.counters().corrected_events == 0);
}

TEST_CASE("single channel error is corrected and copies stay consistent") {
    Instance in(MapFamily::Staircase, 16, 400);
    in.push_clean_rows(300);
    // one real-bit channel error mid-stream; later virtual copies mirror it
    Pos injected[3];
    flip_with_copies(in.buf, in.map, {100, 20}, injected);

    WindowConfig cfg{.window_rows = 128, .max_rounds = 10, .stride = 16};
    WindowDecoder dec(in.buf, in.map, in.code, cfg);
    const auto res = dec.decode_window(160);
    CHECK(res.corrections >= 1);

    for (std::int64_t i = 0; i < 300; ++i) {
        CHECK(bitops::popcount_words(in.buf.row(i).data(),
                                     in.buf.words_per_row()) == 0);
        for (int j = 0; j < in.map.m(); ++j)
            CHECK(in.buf.bit({i, j}) == in.buf.bit(in.map.phi(i, j)));
    }
}

TEST_CASE("rounds are bounded and terminate on a quiet round") {
    Instance in(MapFamily::Chevron, 8, 400);
    in.push_clean_rows(300);
    // a dense burst the toy window cannot fully clean
    for (int j = in.map.m(); j < in.map.n(); ++j)
        for (std::int64_t i = 140; i < 152; ++i) in.buf.flip({i, j});

    WindowConfig cfg{.window_rows = 64, .max_rounds = 10, .stride = 8};
    WindowDecoder dec(in.buf, in.map, in.code, cfg);
    const auto res = dec.decode_window(180);
    CHECK(res.rounds <= 10);
}

TEST_CASE("fresh_only scheduling retires bit-identical output") {
    for (MapFamily fam : {MapFamily::Staircase, MapFamily::Chevron}) {
        PointConfig cfg;
        cfg.family = fam;
        cfg.mbar = 24;
        cfg.p = 2.5e-2;
        cfg.seed = 1234;
        cfg.stop.max_bits = 400'000;
        cfg.stop.target_bit_errors = 0;

        std::vector<std::vector<std::uint64_t>> retired_fresh, retired_exh;
        cfg.scheduling = WindowConfig::Scheduling::FreshOnly;
        run_point(cfg, [&](std::int64_t, std::span<const std::uint64_t> bits,
                           std::uint64_t) {
            retired_fresh.emplace_back(bits.begin(), bits.end());
        });
        cfg.scheduling = WindowConfig::Scheduling::Exhaustive;
        run_point(cfg, [&](std::int64_t, std::span<const std::uint64_t> bits,
                           std::uint64_t) {
            retired_exh.emplace_back(bits.begin(), bits.end());
        });

        REQUIRE(retired_fresh.size() == retired_exh.size());
        CHECK(retired_fresh == retired_exh);
    }
}

TEST_CASE("genie mode never retires more errors than algebraic mode") {
    for (std::uint64_t seed : {7ull, 8ull, 9ull}) {
        PointConfig cfg;
        cfg.family = MapFamily::Chevron;
        cfg.mbar = 30;
        cfg.p = 2.2e-2;
        cfg.seed = seed;
        cfg.stop.max_bits = 2'000'000;
        cfg.stop.target_bit_errors = 0;

        cfg.genie = false;
        const SimStats alg = run_point(cfg);
        cfg.genie = true;
        const SimStats gen = run_point(cfg);

        CHECK(gen.post_fec_errors <= alg.post_fec_errors);
        CHECK(gen.decoder.miscorrection_events == 0);
    }
}
