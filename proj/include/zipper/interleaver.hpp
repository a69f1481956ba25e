#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace zipper {

// A buffer coordinate: row index i (may be negative during startup reads)
// and column j in [0, n).
struct Pos {
    std::int64_t row = 0;
    int col = 0;
    friend bool operator==(const Pos&, const Pos&) = default;
};

enum class MapFamily { Staircase, Chevron, HalfChevron };

const char* family_name(MapFamily f);
MapFamily family_from_name(const std::string& name);  // throws on unknown name

// Interleaver map phi: A -> B for one of the three families, in closed form.
// Construction parameter: staircase takes m (n = 2m); chevron takes m'
// (m = 2m', n = 3m'); half-chevron takes m' (m = 3m', n = 5m').
class InterleaverMap {
public:
    InterleaverMap(MapFamily family, int param);

    static InterleaverMap for_real_width(MapFamily family, int real_width);

    MapFamily family() const { return family_; }
    int param() const { return param_; }
    int n() const { return n_; }
    int m() const { return m_; }
    int real_width() const { return n_ - m_; }
    std::int64_t period() const { return period_; }

    // phi(i, j) for a virtual position, j in [0, m).
    Pos phi(std::int64_t i, int j) const;
    std::int64_t phi_row(std::int64_t i, int j) const { return phi(i, j).row; }

    // Preimages of a real position (j in [m, n)); returns their count (0..2).
    // Preimage rows are always greater than `i` (strict causality).
    int phi_inverse(std::int64_t i, int j, Pos out[2]) const;

    // Max over one period of |i - phi_row(i, j)|, by direct scan.
    std::int64_t memory_rows() const;

    // deg_b histogram over one period of steady-state rows: degree -> count
    // of real positions. deg_b = 1 + |phi_inverse|.
    std::map<int, std::int64_t> degree_histogram() const;

private:
    MapFamily family_;
    int param_;
    int n_;
    int m_;
    std::int64_t period_;
};

}  // namespace zipper
