#include "zipper/window_decoder.hpp"

#include <algorithm>
#include <stdexcept>

namespace zipper {

WindowDecoder::WindowDecoder(Buffer& buf, const InterleaverMap& map,
                             const BchCode& code, const WindowConfig& cfg,
                             const Buffer* reference)
    : buf_(buf), map_(map), code_(code), cfg_(cfg), ref_(reference) {
    if (cfg_.window_rows < 1) throw std::invalid_argument("window_rows must be >= 1");
    if (cfg_.max_rounds < 1) throw std::invalid_argument("max_rounds must be >= 1");
}

bool WindowDecoder::is_true_error(Pos p) const {
    const bool b = buf_.bit(p);
    return ref_ ? (b != ref_->bit(p)) : b;
}

WindowResult WindowDecoder::decode_window(std::int64_t top_row) {
    const std::int64_t lo = std::max<std::int64_t>(0, top_row - cfg_.window_rows + 1);
    if (lo < buf_.base_row() || top_row >= buf_.frontier())
        throw std::out_of_range("decoding window outside retained rows");

    WindowResult result;
    const bool fresh_only =
        cfg_.scheduling == WindowConfig::Scheduling::FreshOnly;

    for (int round = 1; round <= cfg_.max_rounds; ++round) {
        result.rounds = round;
        std::int64_t corrections = 0;

        for (std::int64_t i = lo; i <= top_row; ++i) {
            if (fresh_only && !buf_.fresh(i)) continue;
            ++counters_.decode_attempts;
            const DecodeOutcome o = code_.decode(buf_.row(i).data());
            // Record the content version we decoded; flips below re-freshen.
            buf_.mark_decoded(i);

            if (o.status != DecodeOutcome::Status::Corrected) {
                if (o.status != DecodeOutcome::Status::NoError)
                    ++counters_.decode_failures;
                continue;
            }

            bool all_true = true;
            bool startup_hit = false;
            for (int c = 0; c < o.num_positions; ++c) {
                const Pos p{i, o.positions[c]};
                if (!is_true_error(p)) all_true = false;
                // Virtual bits sourced from rows before the stream start are
                // known to be zero; an error declared there is provably a
                // miscorrection.
                if (p.col < map_.m() && map_.phi_row(i, p.col) < 0)
                    startup_hit = true;
            }
            if (startup_hit) {
                ++counters_.decode_failures;
                continue;
            }
            if (cfg_.genie && !all_true) {
                ++counters_.genie_vetoes;
                ++counters_.decode_failures;
                continue;
            }
            if (!all_true) ++counters_.miscorrection_events;
            ++counters_.corrected_events;

            Pos applied[3];
            for (int c = 0; c < o.num_positions; ++c) {
                flip_with_copies(buf_, map_, Pos{i, o.positions[c]}, applied);
                ++corrections;
            }
        }

        result.corrections += corrections;
        if (corrections == 0) break;
    }
    return result;
}

}  // namespace zipper
