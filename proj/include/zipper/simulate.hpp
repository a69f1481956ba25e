#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "zipper/bch.hpp"
#include "zipper/channel.hpp"
#include "zipper/window_decoder.hpp"

namespace zipper {

struct StopCondition {
    std::uint64_t max_bits = 1'000'000'000;
    std::uint64_t target_bit_errors = 100;
};

// One Monte Carlo operating point.
struct PointConfig {
    MapFamily family = MapFamily::Staircase;
    int mbar = 0;  // real buffer width n - m
    int t = 2;
    double p = 0.0;
    std::uint64_t seed = 1;
    int window_multiplier = 8;  // M = multiplier * (n - m)
    int max_rounds = 10;
    WindowConfig::Scheduling scheduling = WindowConfig::Scheduling::FreshOnly;
    bool genie = false;
    // false: error-domain simulation (all-zero codeword); true: random data
    // with a clean reference stream.
    bool data_domain = false;
    StopCondition stop;
};

struct SimStats {
    std::uint64_t transmitted_bits = 0;
    std::uint64_t pre_fec_errors = 0;
    std::uint64_t post_fec_bits = 0;   // retired real bits past burn-in
    std::uint64_t post_fec_errors = 0;
    std::uint64_t rows_decoded = 0;    // retired rows
    DecoderCounters decoder;
    std::string stop_reason;

    double pre_fec_ber() const {
        return transmitted_bits ? static_cast<double>(pre_fec_errors) /
                                      static_cast<double>(transmitted_bits)
                                : 0.0;
    }
    double post_fec_ber() const {
        return post_fec_bits ? static_cast<double>(post_fec_errors) /
                                   static_cast<double>(post_fec_bits)
                             : 0.0;
    }
};

// Streaming encoder + channel + sliding-window decoder for one point.
// Exposed so tests can inspect retired rows; run_point wraps it.
class StreamSimulator {
public:
    // row: retired row index; bits: packed row content (n bits);
    // errors: residual bit errors in the real part of that row.
    using RetireHook = std::function<void(
        std::int64_t row, std::span<const std::uint64_t> bits,
        std::uint64_t errors)>;

    explicit StreamSimulator(const PointConfig& cfg);

    const InterleaverMap& map() const { return map_; }
    const BchCode& code() const { return code_; }
    const PointConfig& config() const { return cfg_; }
    std::int64_t burn_in_rows() const { return burn_in_rows_; }

    // Advances by one decoding sweep (stride new rows + one window pass +
    // retirement). Returns false once a stop condition has been hit.
    bool step(const RetireHook& hook = {});

    SimStats finish();  // fills stop_reason and returns the stats

    const SimStats& stats() const { return stats_; }

private:
    void ingest_row();
    void retire_up_to(std::int64_t last, const RetireHook& hook);

    PointConfig cfg_;
    InterleaverMap map_;
    BchCode code_;
    std::int64_t window_rows_;
    std::int64_t memory_rows_;
    std::int64_t burn_in_rows_;
    Buffer buf_;
    std::unique_ptr<Buffer> ref_;  // data-domain reference stream
    BscSampler noise_;
    SplitMix64 data_rng_;
    std::unique_ptr<WindowDecoder> decoder_;
    std::int64_t next_retire_ = 0;
    SimStats stats_;
    std::string stop_reason_;
};

SimStats run_point(const PointConfig& cfg,
                   const StreamSimulator::RetireHook& hook = {});

// Runs points on up to `workers` threads; results in input order.
std::vector<SimStats> run_sweep(std::span<const PointConfig> points,
                                int workers);

// CSV emission: one header block, then one data row per point, schema:
// family,rate,mbar,n,m,r,t,p,window_rows,max_rounds,scheduling,genie,seed,
// tx_bits,pre_fec_ber,post_fec_ber,miscorrection_events,corrected_events,
// stop_reason
void write_sweep_csv(std::ostream& os, std::span<const PointConfig> points,
                     std::span<const SimStats> results);

const char* tool_version();

}  // namespace zipper
