// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "eigenfloor/bounds.hpp"
#include "eigenfloor/dqds.hpp"
#include "eigenfloor/eigen_oracle.hpp"
#include "eigenfloor/errors.hpp"
#include "eigenfloor/extremal.hpp"
#include "eigenfloor/sweep.hpp"
#include "eigenfloor/traces.hpp"
#include "test_helpers.hpp"

using namespace eigenfloor;
using eigenfloor::testing::log_uniform;
using eigenfloor::testing::pair_from_alpha;
using eigenfloor::testing::plain_spectrum;
using eigenfloor::testing::dominant_bidiag;
using eigenfloor::testing::random_bidiag;
using eigenfloor::testing::random_pair;
using eigenfloor::testing::rel_diff;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

Outcome optimality() {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(1001);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const int m = 2 + static_cast<int>(rng() % 49);
        const TracePair tp = random_pair(rng, m);
        const ExtremalSpectrum ex = laguerre_extremal_spectrum(tp);
        worst = std::max(worst, rel_diff(ex.spectrum.smallest(), laguerre_bound(tp)));
    }
    const double t = seconds_since(t0);
    return {worst <= 1e-12 && t < 5.0, fmt("1000 pairs, max rel err %.2e (<= 1e-12), %.2fs (< 5s)", worst, t)};
}

Outcome dominance() {
    std::mt19937_64 rng(1002);
    double worst = 0.0;  // most negative (laguerre - other) / laguerre
    for (int i = 0; i < 10000; ++i) {
        const int m = 2 + static_cast<int>(rng() % 99);
        const TracePair tp = random_pair(rng, m);
        const double lag = laguerre_bound(tp);
        for (double other : {newton_bound(tp), bailey_bound(tp), householder_bound(tp)})
            worst = std::min(worst, (lag - other) / lag);
    }
    return {worst >= -1e-13, fmt("10000 pairs, min (laguerre - other)/laguerre %.2e (>= -1e-13)", worst)};
}

Outcome sandwich_sweep() {
    const auto t0 = Clock::now();
    const auto rows = sweep_rows(5, 10000, 1);
    std::size_t violations = 0;
    std::size_t in_window = 0;
    double best_gap = INFINITY;
    double best_lag = 0.0;
    for (const SweepRow& r : rows) {
        if (r.laguerre > r.lambda_min * (1 + 1e-10) || r.lambda_min > r.gap_upper * (1 + 1e-10)) ++violations;
        if (r.alpha >= 0.19 && r.alpha <= 0.21) {
            ++in_window;
            if (r.lambda_min - r.laguerre < best_gap) {
                best_gap = r.lambda_min - r.laguerre;
                best_lag = r.laguerre;
            }
        }
    }
    const double t = seconds_since(t0);
    const bool tight = in_window > 0 && best_gap <= 0.02 * best_lag;
    return {violations == 0 && tight && t < 30.0,
            fmt("10000 rows, %zu sandwich violations; %zu rows in alpha window, min gap %.3e <= %.3e; %.2fs (< 30s)",
                violations, in_window, best_gap, 0.02 * best_lag, t)};
}

Outcome gap_consistency() {
    double worst = 0.0;
    for (int m : {3, 5, 10, 100}) {
        for (int k = 0; k < 1000; ++k) {
            const double al = 1.0 / m + (1.0 - 1.0 / m) * k / 1000.0;
            const TracePair tp = pair_from_alpha(al, m);
            worst = std::max(worst, rel_diff(gap_ratio(tp), laguerre_bound(tp) / gap_upper_bound(tp)));
        }
    }
    return {worst <= 1e-12, fmt("4 x 1000 alpha grid, max rel diff %.2e (<= 1e-12)", worst)};
}

Outcome regimes() {
    bool monotone = true;
    double worst_one = 0.0;
    double worst_limit = 0.0;
    double worst_min = 0.0;
    bool min_holds = true;
    for (int m : {3, 5, 10, 100}) {
        const double lo = 1.0 / m;
        const double hi = 1.0 / (m - 1);
        double prev = INFINITY;
        for (int k = 0; k <= 1000; ++k) {
            const double al = lo + (hi - lo) * k / 1000.0 * (1 - 1e-12);
            const double r = gap_ratio(pair_from_alpha(al, m));
            if (r > prev + 1e-14) monotone = false;
            prev = r;
        }
        worst_one = std::max(worst_one, std::abs(gap_ratio(pair_from_alpha(lo, m)) - 1.0));
        const double near_edge = gap_ratio(pair_from_alpha(hi * (1 - 1e-14), m));
        worst_limit = std::max(worst_limit, std::abs(near_edge - m / (2.0 * (m - 1))));

        // q = 1: at alpha = 1/2 gap_upper = 2/a, so the ratio is m / (2 (1 + sqrt((m-1)(m-2)/2)))
        const double closed = m / (2.0 * (1.0 + std::sqrt((m - 1.0) * (m - 2.0) / 2.0)));
        const double at_half = gap_ratio(pair_from_alpha(0.5, m));
        worst_min = std::max(worst_min, rel_diff(at_half, closed));
        for (int k = 1; k < 1000; ++k) {
            const double al = 0.5 + 0.5 * k / 1000.0;
            if (gap_ratio(pair_from_alpha(al, m)) < at_half - 1e-14) min_holds = false;
        }
    }
    const bool pass = monotone && worst_one <= 1e-12 && worst_limit <= 1e-6 && worst_min <= 1e-12 && min_holds;
    return {pass, fmt("q=m-1: decreasing=%s |r(1/m)-1|=%.1e limit err %.1e (<= 1e-6); q=1: min at 1/2=%s, "
                      "closed-form rel err %.1e (<= 1e-12)",
                      monotone ? "yes" : "no", worst_one, worst_limit, min_holds ? "yes" : "no", worst_min)};
}

Outcome supremum_approach() {
    std::mt19937_64 rng(1006);
    const double eps[] = {1e-3, 1e-6, 1e-9};
    int cases = 0;
    int bad = 0;
    double slope_lo = INFINITY;
    double slope_hi = -INFINITY;
    while (cases < 10) {
        const int m = 3 + static_cast<int>(rng() % 18);
        const Spectrum s = normalize_unit_inverse_trace(plain_spectrum(rng, m));
        const TracePair tp = spectrum_to_tracepair(s);
        if (multiplicity_q(tp) >= m - 1) continue;
        const double target = gap_upper_bound(tp);
        double err[3];
        try {
            for (int k = 0; k < 3; ++k) {
                const ExtremalSpectrum ex = gap_extremal_spectrum(tp, eps[k]);
                err[k] = std::abs(ex.spectrum.smallest() - target) / target;
            }
        } catch (const DomainError&) {
            continue;  // largest epsilon does not fit this pair
        }
        ++cases;
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (int k = 0; k < 3; ++k) {
            const double x = std::log(eps[k]);
            const double y = std::log(err[k]);
            sx += x; sy += y; sxx += x * x; sxy += x * y;
        }
        const double slope = (3 * sxy - sx * sy) / (3 * sxx - sx * sx);
        slope_lo = std::min(slope_lo, slope);
        slope_hi = std::max(slope_hi, slope);
        if (!(err[0] > err[1] && err[1] > err[2]) || std::abs(slope - 1.0) > 0.3) ++bad;
    }
    return {bad == 0, fmt("10 pairs with q < m-1, %d not decreasing or off slope; slopes in [%.3f, %.3f] (1 +- 0.3)",
                          bad, slope_lo, slope_hi)};
}

Outcome perturbation() {
    std::mt19937_64 rng(1007);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    int x_not_decreased = 0;
    int done = 0;
    while (done < 100000) {
        const double x = 0.5 + u(rng);
        const double y = x * u(rng);
        const double z = y * u(rng);
        const double e = (x - z) * u(rng);
        if (!(x > y) || !(e > 0.0) || !(x - z - e > 0.0)) continue;
        const auto r = trace_preserving_perturbation(x, y, z, e);
        worst = std::max(worst, rel_diff(r[0] + r[1] + r[2], x + y + z));
        worst = std::max(worst, rel_diff(r[0] * r[0] + r[1] * r[1] + r[2] * r[2], x * x + y * y + z * z));
        if (!(r[0] < x)) ++x_not_decreased;
        ++done;
    }
    return {worst <= 1e-12 && x_not_decreased == 0,
            fmt("100000 cases, max rel err %.2e (<= 1e-12), x not decreased %d", worst, x_not_decreased)};
}

Outcome fast_traces() {
    std::mt19937_64 rng(1008);
    double worst = 0.0;
    int done = 0;
    while (done < 1000) {
        const std::size_t m = 2 + rng() % 199;
        const double spread = std::pow(10.0, std::uniform_real_distribution<double>(0.0, 1.0)(rng));
        const LowerBidiagonal b = random_bidiag(rng, m, 1.0 / spread, spread);
        const EigenResult sv = bidiagonal_singular_values(b, 1e-6);
        if (sv.values.front() / sv.values.back() > 1e8) continue;
        const TracePair f = traces_fast(b);
        const TracePair o = traces_oracle(b);
        worst = std::max({worst, rel_diff(f.a, o.a), rel_diff(f.b, o.b)});
        ++done;
    }

    const LowerBidiagonal small = dominant_bidiag(rng, 10000);
    const LowerBidiagonal large = dominant_bidiag(rng, 100000);
    auto best_of = [](const LowerBidiagonal& b, int reps) {
        double best = INFINITY;
        volatile double sink = 0.0;
        for (int r = 0; r < 9; ++r) {
            const auto t0 = Clock::now();
            for (int k = 0; k < reps; ++k) sink = sink + traces_fast(b).b;
            best = std::min(best, seconds_since(t0) / reps);
        }
        return best;
    };
    const double ts = best_of(small, 50);
    const double tl = best_of(large, 5);
    const double ratio = tl / ts;
    return {worst <= 1e-10 && ratio <= 15.0,
            fmt("1000 bidiagonals (kappa <= 1e8), max rel err %.2e (<= 1e-10); t(1e5)/t(1e4) = %.2f (<= 15)", worst,
                ratio)};
}

Outcome dqds() {
    std::mt19937_64 rng(1009);
    double worst = 0.0;
    int lag_failed = 0;
    int lag_not_faster = 0;
    for (int i = 0; i < 1000; ++i) {
        const std::size_t m = 2 + rng() % 199;
        const LowerBidiagonal b = random_bidiag(rng, m, 0.1, 10.0);
        const EigenResult ref = bidiagonal_singular_values(b, 0.0);
        DqdsReport lag;
        try {
            lag = run_dqds(b, {ShiftKind::laguerre});
        } catch (const DqdsConvergenceError&) {
            ++lag_failed;
            continue;
        }
        for (std::size_t k = 0; k < m; ++k) worst = std::max(worst, rel_diff(lag.singular_values[k], ref.values[k]));
        int zero_sweeps;
        try {
            zero_sweeps = run_dqds(b, {ShiftKind::zero}).iterations;
        } catch (const DqdsConvergenceError&) {
            zero_sweeps = INT32_MAX;
        }
        if (lag.iterations > zero_sweeps) ++lag_not_faster;
    }
    const double share = 1.0 - lag_not_faster / 1000.0;
    return {lag_failed == 0 && worst <= 1e-10 && share >= 0.95,
            fmt("1000 bidiagonals, %d failed, max rel err %.2e (<= 1e-10); laguerre <= zero sweeps on %.1f%% (>= 95%%)",
                lag_failed, worst, 100.0 * share)};
}

Outcome two_by_two() {
    std::mt19937_64 rng(1010);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const Spectrum s = plain_spectrum(rng, 2);
        const TracePair tp = spectrum_to_tracepair(s);
        worst = std::max({worst, rel_diff(laguerre_bound(tp), s.smallest()), rel_diff(gap_upper_bound(tp), s.smallest())});
    }
    return {worst <= 1e-12, fmt("1000 spectra, max rel err %.2e (<= 1e-12)", worst)};
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"optimality", optimality},
        {"dominance", dominance},
        {"sweep-sandwich", sandwich_sweep},
        {"gap-ratio-consistency", gap_consistency},
        {"gap-ratio-regimes", regimes},
        {"supremum-approach", supremum_approach},
        {"perturbation", perturbation},
        {"fast-traces", fast_traces},
        {"dqds", dqds},
        {"two-by-two-exact", two_by_two},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        std::printf("%s  %-22s %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
        std::fflush(stdout);
        if (!o.pass) ++failed;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
    return failed == 0 ? 0 : 1;
}
