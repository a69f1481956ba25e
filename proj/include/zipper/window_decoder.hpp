#pragma once

#include <cstdint>

#include "zipper/zipper_core.hpp"

namespace zipper {

struct WindowConfig {
    int window_rows = 0;   // M; default 8*(n-m), set by the caller
    int max_rounds = 10;
    int stride = 0;        // rows per window shift; default n-m
    bool genie = false;
    enum class Scheduling { Exhaustive, FreshOnly };
    Scheduling scheduling = Scheduling::FreshOnly;
};

struct WindowResult {
    int rounds = 0;
    std::int64_t corrections = 0;  // bits flipped via declared error positions
};

struct DecoderCounters {
    std::uint64_t decode_attempts = 0;
    std::uint64_t corrected_events = 0;
    std::uint64_t miscorrection_events = 0;
    std::uint64_t decode_failures = 0;
    std::uint64_t genie_vetoes = 0;
};

// Sliding-window iterative decoder. Each window position repeatedly sweeps
// the M rows ending at the top row (oldest first), runs the constituent
// decoder on each visited row, and applies corrections to all copies
// immediately. A sweep with zero corrections, or max_rounds, ends the
// position.
//
// `reference`, when given, holds the transmitted rows (same indexing as
// `buf`) and is used for miscorrection accounting and the genie veto. When
// null, the buffer is taken to be in the error domain (transmitted word
// all-zero), so a set bit is an error.
class WindowDecoder {
public:
    WindowDecoder(Buffer& buf, const InterleaverMap& map, const BchCode& code,
                  const WindowConfig& cfg, const Buffer* reference = nullptr);

    WindowResult decode_window(std::int64_t top_row);

    const DecoderCounters& counters() const { return counters_; }

private:
    bool is_true_error(Pos p) const;

    Buffer& buf_;
    const InterleaverMap& map_;
    const BchCode& code_;
    WindowConfig cfg_;
    const Buffer* ref_;
    DecoderCounters counters_;
};

}  // namespace zipper
