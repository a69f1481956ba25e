#pragma once

#include <array>
#include <cstdint>

namespace zipper::gf {

// GF(2^10) with log/antilog tables built from a primitive polynomial.
// Elements are 10-bit integers; 0 is the additive identity and has no log.
class Field {
public:
    static constexpr int kDegree = 10;
    static constexpr int kOrder = 1023;          // multiplicative group order
    static constexpr int kElements = 1024;
    // x^10 + x^3 + 1, the default primitive polynomial.
    static constexpr unsigned kDefaultPoly = 0x409;

    // Throws std::invalid_argument if the polynomial is not primitive of
    // degree 10 (detected by the generated cycle not covering the group).
    explicit Field(unsigned primitive_poly = kDefaultPoly);

    unsigned primitive_poly() const { return poly_; }

    int log(unsigned x) const { return log_[x]; }         // x != 0
    unsigned alpha_pow(int e) const {                     // e may be >= 1023
        return antilog_[e % kOrder];
    }

    unsigned mul(unsigned a, unsigned b) const {
        if (a == 0 || b == 0) return 0;
        return antilog_[mod_order(log_[a] + log_[b])];
    }
    unsigned div(unsigned a, unsigned b) const {          // b != 0
        if (a == 0) return 0;
        return antilog_[mod_order(log_[a] - log_[b] + kOrder)];
    }
    unsigned inv(unsigned a) const {                      // a != 0
        return antilog_[(kOrder - log_[a]) % kOrder];
    }
    unsigned pow(unsigned a, int e) const {
        if (a == 0) return 0;
        long long p = (static_cast<long long>(log_[a]) * e) % kOrder;
        if (p < 0) p += kOrder;
        return antilog_[p];
    }
    unsigned sqr(unsigned a) const { return mul(a, a); }

    // Trace from GF(2^10) to GF(2).
    unsigned trace(unsigned a) const { return trace_[a]; }

    // One solution y of y^2 + y = d, or -1 if none exists (trace(d) == 1).
    // The other solution is y ^ 1.
    int solve_quadratic(unsigned d) const { return halftrace_[d]; }

private:
    static int mod_order(int e) { return e >= kOrder ? e - kOrder : e; }

    unsigned poly_;
    std::array<int, kElements> log_;
    std::array<unsigned, kOrder> antilog_;
    std::array<unsigned, kElements> trace_;
    std::array<int, kElements> halftrace_;
};

}  // namespace zipper::gf
