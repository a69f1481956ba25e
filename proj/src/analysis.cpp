#include "zipper/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace zipper::analysis {

int parity_bits_for(int t) {
    // deg lcm of the minimal polynomials of alpha, alpha^3, alpha^5 over
    // GF(2^10); each coset has full size 10 for t <= 3. Cross-checked
    // against the generator construction in the codec tests.
    switch (t) {
        case 1: return 10;
        case 2: return 20;
        case 3: return 30;
    }
    throw std::invalid_argument("t must be in {1,2,3}");
}

CodePoint derive_params(MapFamily family, double target_rate, int t) {
    if (!(target_rate > 0.0 && target_rate < 1.0))
        throw std::invalid_argument("rate must be in (0,1)");
    const int r = parity_bits_for(t);
    CodePoint cp;
    cp.family = family;
    cp.target_rate = target_rate;
    cp.t = t;
    cp.r = r;
    // Smallest real width meeting the rate; the epsilon keeps exact targets
    // like 0.80 from rounding up through floating-point noise.
    int mbar = static_cast<int>(std::ceil(r / (1.0 - target_rate) - 1e-9));
    if (family == MapFamily::HalfChevron && mbar % 2 != 0) {
        ++mbar;
        cp.adjusted = true;
    }
    if (mbar <= r) throw std::invalid_argument("infeasible rate for this t");
    cp.mbar = mbar;
    const InterleaverMap map = InterleaverMap::for_real_width(family, mbar);
    cp.n = map.n();
    cp.m = map.m();
    cp.achieved_rate = 1.0 - static_cast<double>(r) / mbar;
    return cp;
}

double miscorrection_estimate(int n, int n_bch, int t, bool exact) {
    if (t < 1 || n > n_bch || n < t)
        throw std::invalid_argument("need 1 <= t <= n <= n_bch");
    double t_fact = 1.0;
    for (int i = 2; i <= t; ++i) t_fact *= i;
    if (!exact)
        return std::pow(static_cast<double>(n) / n_bch, t) / t_fact;
    double ratio = 1.0;  // C(n,t) / C(n_bch,t)
    for (int i = 0; i < t; ++i)
        ratio *= static_cast<double>(n - i) / static_cast<double>(n_bch - i);
    return ratio / t_fact;
}

std::int64_t encoder_memory(MapFamily family, int mbar) {
    return InterleaverMap::for_real_width(family, mbar).memory_rows();
}

std::map<int, double> degree_audit(const InterleaverMap& map) {
    std::map<int, double> out;
    const auto hist = map.degree_histogram();
    std::int64_t total = 0;
    for (const auto& [deg, cnt] : hist) total += cnt;
    for (const auto& [deg, cnt] : hist)
        out[deg] = static_cast<double>(cnt) / static_cast<double>(total);
    return out;
}

namespace {

double binary_entropy(double p) {
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

}  // namespace

double shannon_crossover(double rate) {
    if (!(rate > 0.0 && rate < 1.0))
        throw std::invalid_argument("rate must be in (0,1)");
    // 1 - h2(p) is strictly decreasing on (0, 1/2); bisect.
    double lo = 1e-12, hi = 0.5 - 1e-12;
    for (int iter = 0; iter < 200 && hi - lo > 1e-13; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (1.0 - binary_entropy(mid) > rate)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double q_inv(double p) {
    if (!(p > 0.0 && p < 0.5))
        throw std::invalid_argument("q_inv needs p in (0, 0.5)");
    // Bisection on Q(x) = erfc(x/sqrt(2))/2, then two Newton polish steps.
    double lo = 0.0, hi = 40.0;
    for (int iter = 0; iter < 100; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (0.5 * std::erfc(mid / std::numbers::sqrt2) > p)
            lo = mid;
        else
            hi = mid;
    }
    double x = 0.5 * (lo + hi);
    for (int i = 0; i < 2; ++i) {
        const double f = 0.5 * std::erfc(x / std::numbers::sqrt2) - p;
        const double pdf =
            std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
        x += f / pdf;
    }
    return x;
}

GapResult shannon_gap(double rate, double p_star) {
    if (!(p_star > 0.0 && p_star < 0.5))
        throw std::invalid_argument("p_star must be in (0, 0.5)");
    GapResult g;
    g.p_star = p_star;
    g.p_shannon = shannon_crossover(rate);
    // p = Q(sqrt(2 R Eb/N0)); the rate factor cancels in the ratio.
    g.gap_db = 20.0 * std::log10(q_inv(p_star) / q_inv(g.p_shannon));
    return g;
}

double find_p_star(std::span<const std::pair<double, double>> points,
                   double target_ber) {
    if (target_ber <= 0.0) throw std::invalid_argument("target BER must be positive");
    std::vector<std::pair<double, double>> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end());
    for (const auto& [p, ber] : pts)
        if (ber == target_ber) return p;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const auto [p1, b1] = pts[i];
        const auto [p2, b2] = pts[i + 1];
        if (b1 <= 0.0 || b2 <= 0.0) continue;
        if ((b1 - target_ber) * (b2 - target_ber) < 0.0) {
            const double l1 = std::log10(b1), l2 = std::log10(b2);
            const double lt = std::log10(target_ber);
            return p1 + (p2 - p1) * (lt - l1) / (l2 - l1);
        }
    }
    throw std::invalid_argument("no sweep points bracket the target BER");
}

FactorGraph build_factor_graph(const InterleaverMap& map,
                               std::int64_t row_begin, std::int64_t row_end) {
    FactorGraph g;
    Pos pre[2];
    for (std::int64_t i = row_begin; i < row_end; ++i) {
        for (int j = map.m(); j < map.n(); ++j) {
            const Pos bit{i, j};
            g.edges.emplace_back(bit, i);
            const int cnt = map.phi_inverse(i, j, pre);
            for (int c = 0; c < cnt; ++c) g.edges.emplace_back(bit, pre[c].row);
        }
    }
    return g;
}

bool verify_map(const InterleaverMap& map, std::int64_t rows, std::string* msg) {
    const auto fail = [msg](std::string m) {
        if (msg) *msg = std::move(m);
        return false;
    };
    const std::int64_t nu = map.period();
    const std::int64_t mem = map.memory_rows();
    Pos pre[2];

    for (std::int64_t i = 0; i < rows; ++i) {
        for (int j = 0; j < map.m(); ++j) {
            const Pos t = map.phi(i, j);
            if (t.col < map.m() || t.col >= map.n())
                return fail("phi image outside the real set");
            if (t.row >= i) return fail("strict causality violated");
            const Pos shifted = map.phi(i + nu, j);
            if (shifted.row != t.row + nu || shifted.col != t.col)
                return fail("periodicity violated");
            // phi_inverse must list (i, j) among the preimages of phi(i, j).
            const int cnt = map.phi_inverse(t.row, t.col, pre);
            bool found = false;
            for (int c = 0; c < cnt; ++c)
                if (pre[c].row == i && pre[c].col == j) found = true;
            if (!found) return fail("phi_inverse misses a preimage");
        }
    }

    // Brute-force inverse check: preimage sets over a scan of following rows.
    for (std::int64_t i = 0; i < std::min<std::int64_t>(rows, 2 * nu); ++i) {
        for (int j = map.m(); j < map.n(); ++j) {
            std::set<std::pair<std::int64_t, int>> brute;
            for (std::int64_t i2 = i + 1; i2 <= i + mem; ++i2)
                for (int j2 = 0; j2 < map.m(); ++j2)
                    if (map.phi(i2, j2) == Pos{i, j}) brute.insert({i2, j2});
            const int cnt = map.phi_inverse(i, j, pre);
            std::set<std::pair<std::int64_t, int>> closed;
            for (int c = 0; c < cnt; ++c) closed.insert({pre[c].row, pre[c].col});
            if (brute != closed) return fail("phi_inverse disagrees with brute force");
        }
    }
    if (msg) msg->clear();
    return true;
}

std::span<const OperatingPoint> reference_operating_points() {
    // t=2 operating points: rate, real width, then (p*, gap) per family in
    // the order staircase, chevron, half-chevron.
    static const OperatingPoint kPoints[] = {
        {0.75, 80, {1.64e-2, 1.80e-2, 1.70e-2}, {1.819, 1.665, 1.760}},
        {0.76, 84, {1.58e-2, 1.72e-2, 1.64e-2}, {1.753, 1.616, 1.690}},
        {0.77, 88, {1.52e-2, 1.64e-2, 1.59e-2}, {1.684, 1.563, 1.614}},
        {0.78, 92, {1.46e-2, 1.57e-2, 1.54e-2}, {1.629, 1.505, 1.535}},
        {0.79, 96, {1.42e-2, 1.51e-2, 1.50e-2}, {1.533, 1.441, 1.454}},
        {0.80, 100, {1.39e-2, 1.45e-2, 1.45e-2}, {1.439, 1.372, 1.373}},
        {0.81, 106, {1.32e-2, 1.37e-2, 1.38e-2}, {1.383, 1.327, 1.319}},
        {0.82, 112, {1.25e-2, 1.29e-2, 1.29e-2}, {1.323, 1.279, 1.274}},
        {0.83, 118, {1.19e-2, 1.22e-2, 1.24e-2}, {1.254, 1.219, 1.196}},
        {0.84, 125, {1.13e-2, 1.15e-2, 1.17e-2}, {1.191, 1.158, 1.142}},
        {0.85, 134, {1.06e-2, 1.06e-2, 1.09e-2}, {1.138, 1.126, 1.089}},
        {0.86, 143, {9.89e-3, 9.89e-3, 1.02e-2}, {1.075, 1.075, 1.037}},
        {0.87, 154, {9.19e-3, 9.11e-3, 9.37e-3}, {1.018, 1.030, 0.991}},
        {0.88, 167, {8.45e-3, 8.29e-3, 8.59e-3}, {0.966, 0.991, 0.943}},
        {0.89, 182, {7.71e-3, 7.46e-3, 7.83e-3}, {0.913, 0.957, 0.894}},
        {0.90, 200, {6.97e-3, 6.64e-3, 7.02e-3}, {0.862, 0.922, 0.853}},
        {0.91, 223, {6.17e-3, 5.83e-3, 6.12e-3}, {0.821, 0.890, 0.832}},
        {0.92, 250, {5.41e-3, 4.93e-3, 5.30e-3}, {0.775, 0.884, 0.800}},
        {0.93, 286, {4.50e-3, 4.08e-3, 4.43e-3}, {0.768, 0.878, 0.786}},
        {0.94, 334, {3.77e-3, 3.26e-3, 3.56e-3}, {0.722, 0.878, 0.786}},
    };
    return kPoints;
}

}  // namespace zipper::analysis
