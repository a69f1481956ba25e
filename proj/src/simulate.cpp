#include "zipper/simulate.hpp"

#include <atomic>
#include <cinttypes>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include "zipper/zipper_core.hpp"

namespace zipper {

namespace {

const gf::Field& shared_field() {
    static const gf::Field field;  // default primitive polynomial
    return field;
}

// Hamming distance of bits [bit_begin, bit_end) between two packed rows.
std::uint64_t diff_popcount_range(std::span<const std::uint64_t> a,
                                  std::span<const std::uint64_t> b,
                                  std::size_t bit_begin, std::size_t bit_end) {
    std::uint64_t sum = 0;
    if (bit_begin >= bit_end) return 0;
    const std::size_t w0 = bit_begin >> 6;
    const std::size_t w1 = (bit_end - 1) >> 6;
    for (std::size_t w = w0; w <= w1; ++w) {
        std::uint64_t x = a[w] ^ b[w];
        if (w == w0) x &= ~std::uint64_t{0} << (bit_begin & 63);
        if (w == w1) x &= ~std::uint64_t{0} >> (63 - ((bit_end - 1) & 63));
        sum += std::popcount(x);
    }
    return sum;
}

}  // namespace

const char* tool_version() { return "0.1.0"; }

StreamSimulator::StreamSimulator(const PointConfig& cfg)
    : cfg_(cfg),
      map_(InterleaverMap::for_real_width(cfg.family, cfg.mbar)),
      code_(shared_field(), cfg.t, map_.n()),
      window_rows_(static_cast<std::int64_t>(cfg.window_multiplier) * cfg.mbar),
      memory_rows_(map_.memory_rows()),
      burn_in_rows_(window_rows_ + memory_rows_),
      buf_(map_.n(), window_rows_ + memory_rows_ + cfg.mbar + 1),
      noise_(cfg.p, SplitMix64::stream_seed(cfg.seed, 0)),
      data_rng_(SplitMix64::stream_seed(cfg.seed, 1)) {
    if (cfg.mbar <= code_.r())
        throw std::invalid_argument(
            "real buffer width must exceed the parity count (rate > 0)");
    if (code_.k() < map_.m())
        throw std::invalid_argument("virtual width exceeds code dimension");
    if (cfg_.data_domain)
        ref_ = std::make_unique<Buffer>(map_.n(),
                                        window_rows_ + memory_rows_ + cfg.mbar + 1);
    WindowConfig wcfg;
    wcfg.window_rows = static_cast<int>(window_rows_);
    wcfg.max_rounds = cfg.max_rounds;
    wcfg.stride = cfg.mbar;
    wcfg.genie = cfg.genie;
    wcfg.scheduling = cfg.scheduling;
    decoder_ = std::make_unique<WindowDecoder>(buf_, map_, code_, wcfg, ref_.get());
}

void StreamSimulator::ingest_row() {
    const int m = map_.m();
    const int mbar = map_.real_width();

    if (!cfg_.data_domain) {
        // Error domain: the buffer holds the error pattern directly.
        const std::int64_t i = buf_.push_row();
        fill_virtual(buf_, map_, i);
        auto row = buf_.row(i);
        noise_.next_block(mbar, [&](std::int64_t off) {
            bitops::flip_bit(row.data(), static_cast<std::size_t>(m + off));
            ++stats_.pre_fec_errors;
        });
        stats_.transmitted_bits += static_cast<std::uint64_t>(mbar);
        return;
    }

    // Data domain: encode a clean reference row, then receive it through
    // the channel. Virtual bits at the receiver are copies of the current
    // (possibly corrected, possibly still wrong) buffer contents.
    const int info_bits = code_.k() - m;
    std::vector<std::uint64_t> info(bitops::words_for_bits(info_bits), 0);
    for (auto& w : info) w = data_rng_.next();
    if (info_bits % 64 != 0)
        info.back() &= ~std::uint64_t{0} >> (64 - info_bits % 64);
    const std::int64_t i = encode_row(*ref_, map_, code_, info);

    const std::int64_t ib = buf_.push_row();
    (void)ib;
    auto row = buf_.row(i);
    auto clean = ref_->row(i);
    for (int j = m; j < map_.n(); ++j)
        if (bitops::get_bit(clean.data(), static_cast<std::size_t>(j)))
            bitops::set_bit(row.data(), static_cast<std::size_t>(j), true);
    noise_.next_block(mbar, [&](std::int64_t off) {
        bitops::flip_bit(row.data(), static_cast<std::size_t>(m + off));
        ++stats_.pre_fec_errors;
    });
    fill_virtual(buf_, map_, i);
    stats_.transmitted_bits += static_cast<std::uint64_t>(mbar);
}

void StreamSimulator::retire_up_to(std::int64_t last, const RetireHook& hook) {
    const int m = map_.m();
    const int n = map_.n();
    for (; next_retire_ <= last; ++next_retire_) {
        auto row = buf_.row(next_retire_);
        std::uint64_t errors;
        if (cfg_.data_domain)
            errors = diff_popcount_range(row, ref_->row(next_retire_),
                                         static_cast<std::size_t>(m),
                                         static_cast<std::size_t>(n));
        else
            errors = bitops::popcount_range(row.data(),
                                            static_cast<std::size_t>(m),
                                            static_cast<std::size_t>(n));
        if (next_retire_ >= burn_in_rows_) {
            stats_.post_fec_bits += static_cast<std::uint64_t>(n - m);
            stats_.post_fec_errors += errors;
        }
        ++stats_.rows_decoded;
        if (hook) hook(next_retire_, row, errors);
    }
    buf_.release_below(next_retire_);
    if (ref_) ref_->release_below(next_retire_);
}

bool StreamSimulator::step(const RetireHook& hook) {
    if (!stop_reason_.empty()) return false;

    for (int s = 0; s < map_.real_width(); ++s) ingest_row();
    decoder_->decode_window(buf_.frontier() - 1);
    retire_up_to(buf_.frontier() - 1 - window_rows_ - memory_rows_, hook);

    if (cfg_.stop.target_bit_errors > 0 &&
        stats_.post_fec_errors >= cfg_.stop.target_bit_errors) {
        stop_reason_ = "target_errors";
        return false;
    }
    if (stats_.transmitted_bits >= cfg_.stop.max_bits) {
        stop_reason_ = "max_bits";
        return false;
    }
    return true;
}

SimStats StreamSimulator::finish() {
    stats_.decoder = decoder_->counters();
    stats_.stop_reason = stop_reason_.empty() ? "stopped" : stop_reason_;
    return stats_;
}

SimStats run_point(const PointConfig& cfg,
                   const StreamSimulator::RetireHook& hook) {
    StreamSimulator sim(cfg);
    while (sim.step(hook)) {
    }
    return sim.finish();
}

std::vector<SimStats> run_sweep(std::span<const PointConfig> points,
                                int workers) {
    if (points.empty()) throw std::invalid_argument("sweep needs at least one point");
    std::vector<SimStats> results(points.size());
    const int nthreads =
        std::max(1, std::min<int>(workers, static_cast<int>(points.size())));
    if (nthreads == 1) {
        for (std::size_t i = 0; i < points.size(); ++i)
            results[i] = run_point(points[i]);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int w = 0; w < nthreads; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= points.size() || failed.load()) return;
                try {
                    results[i] = run_point(points[i]);
                } catch (...) {
                    failed.store(true);
                    throw;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    return results;
}

void write_sweep_csv(std::ostream& os, std::span<const PointConfig> points,
                     std::span<const SimStats> results) {
    os << "# zipper-sim " << tool_version() << "\n";
    os << "# rng=" << SplitMix64::kName
       << " bitops=" << bitops::backend_name() << "\n";
    os << "family,rate,mbar,n,m,r,t,p,window_rows,max_rounds,scheduling,genie,"
          "seed,tx_bits,pre_fec_ber,post_fec_ber,miscorrection_events,"
          "corrected_events,stop_reason\n";
    char buf[512];
    for (std::size_t i = 0; i < points.size(); ++i) {
        const PointConfig& c = points[i];
        const SimStats& s = results[i];
        const InterleaverMap map = InterleaverMap::for_real_width(c.family, c.mbar);
        const int r = 10 * c.t;
        const double rate = 1.0 - static_cast<double>(r) / c.mbar;
        std::snprintf(
            buf, sizeof buf,
            "%s,%.17g,%d,%d,%d,%d,%d,%.17g,%d,%d,%s,%d,%" PRIu64 ",%" PRIu64
            ",%.17g,%.17g,%" PRIu64 ",%" PRIu64 ",%s\n",
            family_name(c.family), rate, c.mbar, map.n(), map.m(), r, c.t, c.p,
            c.window_multiplier * c.mbar, c.max_rounds,
            c.scheduling == WindowConfig::Scheduling::FreshOnly ? "fresh_only"
                                                                : "exhaustive",
            c.genie ? 1 : 0, c.seed, s.transmitted_bits, s.pre_fec_ber(),
            s.post_fec_ber(), s.decoder.miscorrection_events,
            s.decoder.corrected_events, s.stop_reason.c_str());
        os << buf;
    }
}

}  // namespace zipper
