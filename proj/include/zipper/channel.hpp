#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace zipper {

// Counter-style splitmix64 generator. Cheap to seed, and independent
// streams are derived by hashing the stream index into the seed, so sweep
// workers never share state.
class SplitMix64 {
public:
    static constexpr const char* kName = "splitmix64";

    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    static std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
        SplitMix64 g(seed ^ (0x6a09e667f3bcc909ull * (stream + 1)));
        return g.next();
    }

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

// Binary symmetric channel with crossover probability p, sampled as
// geometric gaps between flipped bits.
class BscSampler {
public:
    BscSampler(double p, std::uint64_t seed) : rng_(seed), p_(p) {
        if (p < 0.0 || p > 0.5)
            throw std::invalid_argument("BSC crossover probability must be in [0, 0.5]");
        if (p > 0.0) inv_log_q_ = 1.0 / std::log1p(-p);
        gap_ = p > 0.0 ? draw_gap() : -1;
    }

    double p() const { return p_; }

    // Visits the indices of flipped bits in the next `width` channel bits.
    template <typename Fn>
    void next_block(std::int64_t width, Fn&& on_error) {
        if (p_ <= 0.0) return;
        while (gap_ < width) {
            on_error(gap_);
            gap_ += 1 + draw_gap();
        }
        gap_ -= width;
    }

private:
    std::int64_t draw_gap() {
        // floor(log(1-u)/log(1-p)) is Geometric(p) on {0,1,...}
        const double u = rng_.next_double();
        return static_cast<std::int64_t>(std::log1p(-u) * inv_log_q_);
    }

    SplitMix64 rng_;
    double p_;
    double inv_log_q_ = 0.0;
    std::int64_t gap_ = -1;
};

}  // namespace zipper
