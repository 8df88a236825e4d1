#pragma once

// Closed-form lower bounds on lambda_min(A) from a = Tr(A^-1), b = Tr(A^-2),
// and the supremum of lambda_min over all matrices sharing (a, b, m).
//
// Each lower bound is one step, started at 0, of a root finder applied to
// det(lambda I - A), with f/f' and f f''/f'^2 rewritten through the traces.
// The Laguerre step is the sharpest bound expressible in (a, b, m) alone: it
// is attained by the spectrum with one small eigenvalue and m - 1 equal
// large ones (see extremal.hpp).

#include <vector>

#include "eigenfloor/spectral.hpp"

namespace eigenfloor {

/// b^(-1/2).
double newton_bound(const TracePair& tp);

/// 2a / (a^2 + b).
double bailey_bound(const TracePair& tp);

/// (1/a) (3/2 - b / (2 a^2)).
double householder_bound(const TracePair& tp);

/// (1/a) m / (1 + sqrt((m - 1)(m alpha - 1))). Throws DomainError when the
/// pair is infeasible.
double laguerre_bound(const TracePair& tp);

/// b / a^2, in [1/m, 1) for feasible pairs.
double alpha(const TracePair& tp);

/// The integer q with q < a^2/b <= q + 1, clamped to [1, m - 1].
///
/// A 1e-12 downward nudge keeps boundary inputs alpha = 1/(q+1) on the lower
/// q; at that boundary the radicand of gap_upper_bound vanishes, so either
/// neighbour yields the same value.
int multiplicity_q(const TracePair& tp);

/// Supremum of lambda_min: (1/a) q(q+1) / (q + sqrt(q((q+1) alpha - 1))).
double gap_upper_bound(const TracePair& tp);

/// laguerre_bound / gap_upper_bound evaluated from alpha, q and m directly.
double gap_ratio(const TracePair& tp);

BoundReport bound_report(const TracePair& tp);

struct LaguerreIterationOptions {
    double tol = 1e-14;
    int max_iter = 60;
};

struct LaguerreIterationResult {
    double lambda = 0.0;
    int iterations = 0;
    std::vector<double> iterates;  // lambda^(1), lambda^(2), ...
};

/// Laguerre iteration on det(lambda I - T) from lambda = 0, each step being
/// lambda + laguerre_bound of the shifted traces of T - lambda I. Stops when
/// the step drops below tol * lambda or after max_iter steps.
///
/// Every iterate is certified below lambda_min(T) by an LDL^T factorization;
/// a step that rounding pushes past lambda_min is shortened until it is not,
/// and the iteration stops once no step beyond the current iterate can be
/// certified. Throws ConvergenceError (carrying 0, the last safe iterate)
/// when not even the first step can be certified.
LaguerreIterationResult iterated_laguerre(const SymTridiagonal& t,
                                          const LaguerreIterationOptions& opts = {});

}  // namespace eigenfloor
