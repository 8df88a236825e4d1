#pragma once

// Spectra that sit on the two edges of the region of lambda_min reachable
// from a fixed trace pair, plus the three-coordinate move that keeps both
// power sums of the reciprocals fixed.
//
// Working in reciprocals x_k = 1/lambda_k, the pair fixes sum x_k = a and
// sum x_k^2 = b. The largest x_m (smallest lambda) is reached with the other
// m - 1 coordinates equal; the smallest x_m with q equal top coordinates,
// one intermediate, and the rest at zero (infinite eigenvalues), realized
// here as a small epsilon.

#include <array>

#include "eigenfloor/spectral.hpp"

namespace eigenfloor {

enum class ExtremalKind { laguerre_minimizer, gap_maximizer };

struct ExtremalSpectrum {
    Spectrum spectrum;
    ExtremalKind kind;
    double epsilon = 0.0;
};

/// One simple small eigenvalue 1/x_m+ and m - 1 equal large ones; its
/// smallest eigenvalue equals laguerre_bound(tp).
ExtremalSpectrum laguerre_extremal_spectrum(const TracePair& tp);

/// With q = multiplicity_q(tp): m - q - 1 reciprocals at epsilon, one at
/// x_{m-q}, and q at x_m, solving the two power-sum equations on the x+
/// branch. lambda_min -> gap_upper_bound(tp) as epsilon -> 0, with O(epsilon)
/// error. epsilon is ignored when m - q - 1 = 0. Throws DomainError when
/// epsilon = 0 is requested with surrogate slots, or epsilon is too large for
/// the two-level system to stay real, positive and ordered.
ExtremalSpectrum gap_extremal_spectrum(const TracePair& tp, double epsilon);

/// Moves (x, y, z) to (x - eps, y + t eps, z + (1 - t) eps) with t the larger
/// root of eps t^2 + (y - z - eps) t + (z - x + eps) = 0, which keeps
/// x + y + z and x^2 + y^2 + z^2 fixed. The last two coordinates are
/// returned in non-increasing order.
///
/// Requires x > y >= z >= 0, eps > 0 and x - z - eps > 0.
std::array<double, 3> trace_preserving_perturbation(double x, double y, double z, double epsilon);

struct AttainabilityReport {
    double laguerre_bound = 0.0;
    double laguerre_lambda_min = 0.0;   // oracle lambda_min of the minimizer
    double laguerre_gap = 0.0;          // |difference|
    double laguerre_rel_gap = 0.0;
    double gap_upper = 0.0;
    double gap_lambda_min = 0.0;        // oracle lambda_min of the maximizer
    double gap_gap = 0.0;
    double gap_rel_gap = 0.0;
    double epsilon = 0.0;
    double tol = 0.0;
    bool pass = false;
};

/// Builds both extremal spectra, measures their smallest eigenvalue with the
/// bisection oracle on the diagonal realization, and passes when both
/// relative mismatches are <= tol.
AttainabilityReport verify_attainability(const TracePair& tp, double epsilon, double tol);

}  // namespace eigenfloor
