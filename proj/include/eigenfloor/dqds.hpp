#pragma once

// Singular values of a bidiagonal B by the differential qd algorithm with
// shifts. Shifts come from the trace-based lower bounds of the current
// (already shifted) matrix, recomputed each sweep in O(n).

#include <string_view>
#include <vector>

#include "eigenfloor/errors.hpp"
#include "eigenfloor/spectral.hpp"

namespace eigenfloor {

/// q_i = diag_i^2, e_i = sub_i^2 of the working bidiagonal. The represented
/// eigenvalues are sigma_i(B)^2 - sigma_accum.
struct QdArrays {
    std::vector<double> q;
    std::vector<double> e;
    double sigma_accum = 0.0;
};

enum class ShiftKind { zero, newton2, laguerre };

struct ShiftStrategy {
    ShiftKind kind = ShiftKind::laguerre;
    // Margin against trace rounding; the bounds are strict in exact arithmetic.
    double safety_factor = 1.0 - 1e-8;
};

/// "zero", "newton2" or "laguerre"; throws ParseError otherwise.
ShiftKind parse_shift_kind(std::string_view name);
std::string_view to_string(ShiftKind kind);

struct SweepLogEntry {
    int sweep = 0;
    double shift = 0.0;
    double smallest_q = 0.0;
};

struct DqdsReport {
    std::vector<double> singular_values;  // non-increasing
    int iterations = 0;                   // successful dqds sweeps
    std::vector<double> shifts_applied;   // one per sweep
    int failures = 0;                     // rejected shifts + shift fallbacks
    std::vector<SweepLogEntry> log;
};

class DqdsConvergenceError : public ConvergenceError {
public:
    DqdsConvergenceError(const std::string& what, DqdsReport partial)
        : ConvergenceError(what), partial_(std::move(partial)) {}
    const DqdsReport& partial() const noexcept { return partial_; }

private:
    DqdsReport partial_;
};

/// Throws SingularMatrixError.
QdArrays qd_from_bidiagonal(const LowerBidiagonal& b);

/// One dqds transform with the given shift:
///   d = q_0 - s;  q^_i = d + e_i;  e^_i = e_i q_{i+1} / q^_i;
///   d = d q_{i+1} / q^_i - s;  q^_{n-1} = d.
/// Throws ShiftRejected with the index of the first nonpositive d.
QdArrays dqds_step(const QdArrays& state, double shift);

struct ShiftChoice {
    double shift = 0.0;
    bool failed = false;  // bound evaluation failed, shift fell back to 0
};

ShiftChoice choose_shift(const ShiftStrategy& strategy, const QdArrays& state);

struct DqdsOptions {
    double tol = 1e-15;
    int max_retries = 4;
    int sweeps_per_row = 30;
};

/// tol is relative to the bidiagonal entries; on the squared qd arrays it
/// acts as tol^2. Deflates the trailing entry when e_{n-2} <= tol^2 (sigma +
/// q_{n-1}) or e_{n-2} <= tol^2 q_{n-2}, and splits at interior
/// e_i <= tol^2 sqrt(q_i q_{i+1}). A rejected shift is halved up to
/// max_retries times, then replaced by zero.
///
/// Throws DqdsConvergenceError with the partial report after
/// sweeps_per_row * n sweeps.
DqdsReport run_dqds(const LowerBidiagonal& b, const ShiftStrategy& strategy, const DqdsOptions& opts = {});

}  // namespace eigenfloor
