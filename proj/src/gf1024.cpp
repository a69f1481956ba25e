#include "zipper/gf1024.hpp"

#include <stdexcept>

namespace zipper::gf {

Field::Field(unsigned primitive_poly) : poly_(primitive_poly) {
    if ((poly_ >> kDegree) != 1u || poly_ >= (2u << kDegree))
        throw std::invalid_argument("primitive polynomial must have degree 10");

    log_.fill(-1);
    unsigned x = 1;
    for (int e = 0; e < kOrder; ++e) {
        if (log_[x] != -1)
            throw std::invalid_argument("polynomial is not primitive");
        antilog_[e] = x;
        log_[x] = e;
        x <<= 1;
        if (x & (1u << kDegree)) x ^= poly_;
    }
    if (x != 1) throw std::invalid_argument("polynomial is not primitive");

    // Trace via repeated squaring: Tr(a) = a + a^2 + ... + a^512.
    for (unsigned a = 0; a < kElements; ++a) {
        unsigned t = 0, s = a;
        for (int i = 0; i < kDegree; ++i) {
            t ^= s;
            s = (s == 0) ? 0u : antilog_[(2 * log_[s]) % kOrder];
        }
        trace_[a] = t;  // 0 or 1
    }

    // y^2 + y is 2-to-1 onto the trace-0 subspace; tabulate one preimage.
    halftrace_.fill(-1);
    for (unsigned y = 0; y < kElements; ++y) {
        unsigned y2 = (y == 0) ? 0u : antilog_[(2 * log_[y]) % kOrder];
        unsigned d = y2 ^ y;
        if (halftrace_[d] == -1) halftrace_[d] = static_cast<int>(y);
    }
}

}  // namespace zipper::gf
