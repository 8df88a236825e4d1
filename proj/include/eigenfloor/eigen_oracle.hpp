#pragma once

// Ground-truth eigenvalues by bisection on inertia counts. Independent of
// the trace engine and the dqds solver.
//
// The *_serial variants are the reference implementations; the default
// entry points bisect each index in an OpenMP parallel loop and must return
// bit-identical results.

#include <cstddef>
#include <span>
#include <vector>

#include "eigenfloor/spectral.hpp"

namespace eigenfloor {

struct EigenResult {
    std::vector<double> values;  // non-increasing
    double tol = 0.0;            // certified half-width of each value
    bool relative = false;       // tol is relative to each value
};

/// Number of eigenvalues of T strictly less than sigma.
std::size_t sturm_count(const SymTridiagonal& t, double sigma);

/// Number of eigenvalues of B B^T strictly less than mu, where q = diag(B)^2
/// and e = sub(B)^2, from the differential stationary qd transform of
/// B B^T - mu I. Relative perturbations of q and e move the count threshold
/// only relatively, so small eigenvalues are resolved to full relative
/// accuracy regardless of the condition number.
std::size_t qd_count_below(std::span<const double> q, std::span<const double> e, double mu);

/// Bisection on [max(0, Gershgorin lower), Gershgorin upper] until the
/// bracket is narrower than tol (tol = 0: floating-point resolution).
double smallest_eigenvalue(const SymTridiagonal& t, double tol);

/// All eigenvalues, each to absolute half-width tol.
EigenResult full_spectrum(const SymTridiagonal& t, double tol);
EigenResult full_spectrum_serial(const SymTridiagonal& t, double tol);

/// Singular values of B, each to relative half-width tol (tol = 0:
/// floating-point resolution). Throws SingularMatrixError.
EigenResult bidiagonal_singular_values(const LowerBidiagonal& b, double tol);
EigenResult bidiagonal_singular_values_serial(const LowerBidiagonal& b, double tol);

}  // namespace eigenfloor
