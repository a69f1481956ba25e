#include "zipper/interleaver.hpp"

#include <algorithm>

namespace zipper {

const char* family_name(MapFamily f) {
    switch (f) {
        case MapFamily::Staircase: return "staircase";
        case MapFamily::Chevron: return "chevron";
        case MapFamily::HalfChevron: return "half-chevron";
    }
    return "?";
}

MapFamily family_from_name(const std::string& name) {
    if (name == "staircase") return MapFamily::Staircase;
    if (name == "chevron") return MapFamily::Chevron;
    if (name == "half-chevron" || name == "halfchevron")
        return MapFamily::HalfChevron;
    throw std::invalid_argument("unknown interleaver family: " + name);
}

InterleaverMap::InterleaverMap(MapFamily family, int param)
    : family_(family), param_(param) {
    if (param < 1) throw std::invalid_argument("map parameter must be positive");
    switch (family) {
        case MapFamily::Staircase:
            m_ = param;
            n_ = 2 * param;
            period_ = param;
            break;
        case MapFamily::Chevron:
            m_ = 2 * param;
            n_ = 3 * param;
            period_ = 1;
            break;
        case MapFamily::HalfChevron:
            m_ = 3 * param;
            n_ = 5 * param;
            period_ = 1;
            break;
    }
}

InterleaverMap InterleaverMap::for_real_width(MapFamily family, int real_width) {
    switch (family) {
        case MapFamily::Staircase:
            return InterleaverMap(family, real_width);
        case MapFamily::Chevron:
            return InterleaverMap(family, real_width);
        case MapFamily::HalfChevron:
            if (real_width % 2 != 0)
                throw std::invalid_argument(
                    "half-chevron requires an even real buffer width");
            return InterleaverMap(family, real_width / 2);
    }
    throw std::invalid_argument("unknown family");
}

Pos InterleaverMap::phi(std::int64_t i, int j) const {
    const int mp = param_;
    switch (family_) {
        case MapFamily::Staircase: {
            // i = m*q + s, s in [m); phi(i, j) = (m(q-1) + j, m + s)
            const std::int64_t q = i >= 0 ? i / mp : -((-i + mp - 1) / mp);
            const int s = static_cast<int>(i - q * mp);
            return {mp * (q - 1) + j, mp + s};
        }
        case MapFamily::Chevron:
            if (j < mp) return {i - j - 2 * mp - 1, 2 * mp + j};
            return {i - 2 * mp + j, mp + j};
        case MapFamily::HalfChevron:
            if (j < mp) return {i - j - 4 * mp - 1, 3 * mp + j};
            return {i - 3 * mp + j, 2 * mp + j};
    }
    return {};
}

int InterleaverMap::phi_inverse(std::int64_t i, int j, Pos out[2]) const {
    const int mp = param_;
    switch (family_) {
        case MapFamily::Staircase: {
            // phi(m(q'+1) + (j-m), i mod m) = (i, j)
            const std::int64_t q = i >= 0 ? i / mp : -((-i + mp - 1) / mp);
            const int s = static_cast<int>(i - q * mp);
            out[0] = {mp * (q + 1) + (j - mp), s};
            return 1;
        }
        case MapFamily::Chevron:
            out[0] = {i + j + 1, j - 2 * mp};          // first branch
            out[1] = {i + 3 * mp - j, j - mp};          // second branch
            return 2;
        case MapFamily::HalfChevron: {
            int cnt = 0;
            if (j < 4 * mp) out[cnt++] = {i + j + mp + 1, j - 3 * mp};
            out[cnt++] = {i + 5 * mp - j, j - 2 * mp};
            return cnt;
        }
    }
    return 0;
}

std::int64_t InterleaverMap::memory_rows() const {
    std::int64_t best = 0;
    for (std::int64_t i = 0; i < period_; ++i)
        for (int j = 0; j < m_; ++j)
            best = std::max(best, i - phi_row(i, j));
    return best;
}

std::map<int, std::int64_t> InterleaverMap::degree_histogram() const {
    std::map<int, std::int64_t> hist;
    Pos buf[2];
    for (std::int64_t i = 0; i < period_; ++i)
        for (int j = m_; j < n_; ++j)
            ++hist[1 + phi_inverse(i, j, buf)];
    return hist;
}

}  // namespace zipper
