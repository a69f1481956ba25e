#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zipper/interleaver.hpp"

namespace zipper::analysis {

// A code operating point derived from (family, target rate, t).
struct CodePoint {
    MapFamily family;
    double target_rate = 0.0;
    double achieved_rate = 0.0;
    int mbar = 0;  // real buffer width n - m
    int n = 0;
    int m = 0;
    int r = 0;
    int t = 2;
    bool adjusted = false;  // mbar bumped to the family's admissible granularity
};

// Parity bits of the length-1023 BCH code for a given correction radius.
int parity_bits_for(int t);

// mbar = ceil(r / (1 - R)), then rounded up to even for half-chevron.
// Throws std::invalid_argument when the rate is infeasible.
CodePoint derive_params(MapFamily family, double target_rate, int t);

// Eq-style estimate of the decoder miscorrection rate of a length-n code
// shortened from length n_bch, given > t errors: exact binomial ratio
// (1/t!) C(n,t)/C(n_bch,t), or the (n/n_bch)^t / t! approximation.
double miscorrection_estimate(int n, int n_bch, int t, bool exact);

// Encoder memory size: max over one period of i - phi_row(i, j).
std::int64_t encoder_memory(MapFamily family, int mbar);

// deg_b distribution over steady-state rows: degree -> fraction of real bits.
std::map<int, double> degree_audit(const InterleaverMap& map);

struct GapResult {
    double p_star = 0.0;
    double p_shannon = 0.0;
    double gap_db = 0.0;
};

// Crossover probability of the hard-decision Shannon limit: 1 - h2(p) = R.
double shannon_crossover(double rate);

// Inverse Gaussian tail: x such that Q(x) = p, for p in (0, 0.5).
double q_inv(double p);

// Gap in dB between the BI-AWGN Eb/N0 producing crossover p_star and the
// Eb/N0 at the rate-R hard-decision capacity point.
GapResult shannon_gap(double rate, double p_star);

// Log-linear interpolation of log10(BER) vs p at target_ber. `points` are
// (p, ber) pairs; throws std::invalid_argument without a bracketing pair.
double find_p_star(std::span<const std::pair<double, double>> points,
                   double target_ber);

// Factor graph over bit vertices (real positions of rows [row_begin,
// row_end)) and the codeword vertices they touch.
struct FactorGraph {
    std::vector<std::pair<Pos, std::int64_t>> edges;  // (bit vertex, row vertex)
};
FactorGraph build_factor_graph(const InterleaverMap& map,
                               std::int64_t row_begin, std::int64_t row_end);

// Exhaustive verification of the map contracts over `rows` rows: strict
// causality, periodicity, and phi/phi_inverse consistency against a brute
// force scan. Returns true and leaves *msg empty on success.
bool verify_map(const InterleaverMap& map, std::int64_t rows, std::string* msg);

// One published operating point (Table-style data): rate, mbar and the
// (p*, gap) pair for each family at t=2.
struct OperatingPoint {
    double rate;
    int mbar;
    double p_star[3];  // staircase, chevron, half-chevron
    double gap_db[3];
};
std::span<const OperatingPoint> reference_operating_points();

}  // namespace zipper::analysis
