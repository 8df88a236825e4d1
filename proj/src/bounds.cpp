#include "eigenfloor/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "eigenfloor/errors.hpp"
#include "eigenfloor/traces.hpp"

namespace eigenfloor {

namespace {

// Feasible pairs can produce -1e-17 radicands by rounding.
double clamped_sqrt(double radicand) { return std::sqrt(std::max(radicand, 0.0)); }

double laguerre_from_alpha(double a, double al, int m) {
    return (1.0 / a) * m / (1.0 + clamped_sqrt((m - 1.0) * (m * al - 1.0)));
}

double gap_upper_from_alpha(double a, double al, int q) {
    return (1.0 / a) * (q * (q + 1.0)) / (q + clamped_sqrt(q * ((q + 1.0) * al - 1.0)));
}

}  // namespace

double newton_bound(const TracePair& tp) {
    require_feasible(tp);
    return 1.0 / std::sqrt(tp.b);
}

double bailey_bound(const TracePair& tp) {
    require_feasible(tp);
    return 2.0 * tp.a / (tp.a * tp.a + tp.b);
}

double householder_bound(const TracePair& tp) {
    require_feasible(tp);
    return (1.0 / tp.a) * (1.5 - tp.b / (2.0 * tp.a * tp.a));
}

double alpha(const TracePair& tp) {
    require_feasible(tp);
    return tp.b / (tp.a * tp.a);
}

double laguerre_bound(const TracePair& tp) {
    return laguerre_from_alpha(tp.a, alpha(tp), tp.m);
}

int multiplicity_q(const TracePair& tp) {
    require_feasible(tp);
    const double ratio = tp.a * tp.a / tp.b;
    const int q = static_cast<int>(std::ceil(ratio - 1e-12)) - 1;
    return std::clamp(q, 1, tp.m - 1);
}

double gap_upper_bound(const TracePair& tp) {
    return gap_upper_from_alpha(tp.a, alpha(tp), multiplicity_q(tp));
}

double gap_ratio(const TracePair& tp) {
    const double al = alpha(tp);
    const int q = multiplicity_q(tp);
    const double m = tp.m;
    return m / (q * (q + 1.0)) * (q + clamped_sqrt(q * ((q + 1.0) * al - 1.0))) /
           (1.0 + clamped_sqrt((m - 1.0) * (m * al - 1.0)));
}

BoundReport bound_report(const TracePair& tp) {
    BoundReport r;
    r.newton = newton_bound(tp);
    r.bailey = bailey_bound(tp);
    r.householder = householder_bound(tp);
    r.laguerre = laguerre_bound(tp);
    r.alpha = alpha(tp);
    r.q = multiplicity_q(tp);
    r.gap_upper = gap_upper_bound(tp);
    r.gap_ratio = gap_ratio(tp);
    return r;
}

LaguerreIterationResult iterated_laguerre(const SymTridiagonal& t, const LaguerreIterationOptions& opts) {
    if (!(opts.tol > 0.0)) throw DomainError("iterated_laguerre: tol must be positive");
    if (!t.is_positive_definite()) {
        const auto piv = t.ldlt_pivots();
        throw NotPositiveDefiniteError(piv.size() - 1, piv.back());
    }
    const int m = static_cast<int>(t.size());

    LaguerreIterationResult out;
    double lambda = 0.0;
    double prev_taken = std::numeric_limits<double>::infinity();
    for (int it = 0; it < opts.max_iter; ++it) {
        const ShiftedTracePair st = shifted_traces(t, lambda);
        double step = laguerre_from_alpha(st.a_shift, st.b_shift / (st.a_shift * st.a_shift), m);
        // Rounding can push lambda + step just past lambda_min; back off by a
        // relative amount that starts at a few ulps and doubles.
        double backoff = 0.0;
        double next = lambda + step;
        bool stuck = false;
        while (!t.is_positive_definite(next)) {
            backoff = backoff == 0.0 ? 4.0 * std::numeric_limits<double>::epsilon() : 2.0 * backoff;
            if (backoff >= 1.0 && it > 0) {
                // lambda itself is certified and no step beyond it is
                stuck = true;
                break;
            }
            if (backoff >= 1.0) {
                std::ostringstream msg;
                msg.precision(17);
                msg << "iterated_laguerre could not stay below lambda_min; last safe iterate " << lambda;
                throw ConvergenceError(msg.str(), lambda);
            }
            next = lambda + step * (1.0 - backoff);
        }
        if (stuck) break;
        out.iterates.push_back(next);
        out.iterations = it + 1;
        const double taken = next - lambda;
        lambda = next;
        // A tiny backoff, or small steps that stopped shrinking, mean
        // lambda_min was hit to working precision.
        const bool stalled = taken < 1e-6 * next && taken >= prev_taken;
        if (taken < opts.tol * next || (backoff > 0.0 && backoff < 1e-8) || stalled) break;
        prev_taken = taken;
    }
    out.lambda = lambda;
    return out;
}

}  // namespace eigenfloor
