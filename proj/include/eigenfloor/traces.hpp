#pragma once

// Tr(A^-1) and Tr(A^-2) for A = B B^T (B lower bidiagonal) or for a shifted
// symmetric tridiagonal T - lambda*I.
//
// The fast path works on the factored form A = L D L^T, L unit lower
// bidiagonal. With r_j = l_j^2 D_j / D_{j+1} the squared ratio of consecutive
// entries in a column of B^-1, two sweeps of nonnegative recurrences give
//
//   forward   Q_0 = 0,       Q_{j+1} = r_j (Q_j + 1/D_j)
//   backward  t_{m-1} = 1,   t_j = 1 + r_j t_{j+1}
//
//   Tr(A^-1) = sum_j t_j / D_j
//   Tr(A^-2) = sum_j c_j (c_j + 2 t_j Q_j),   c_j = t_j / D_j
//
// c_j is the squared norm of column j of B^-1 and t_j Q_j collects the
// off-diagonal part of the semiseparable inverse. Every term is nonnegative,
// so the sums keep full relative accuracy and no intermediate exceeds the
// final trace.

#include <span>

#include "eigenfloor/spectral.hpp"

namespace eigenfloor {

struct ShiftedTracePair {
    double lambda = 0.0;
    double a_shift = 0.0;  // Tr((A - lambda I)^-1)
    double b_shift = 0.0;  // Tr((A - lambda I)^-2)
};

/// O(m^2) reference: solves B y = e_j and B^T x = y for every column.
/// Throws SingularMatrixError.
TracePair traces_oracle(const LowerBidiagonal& b);

/// O(m) path. Throws SingularMatrixError, or OverflowError naming the index
/// where the accumulation left the double range.
TracePair traces_fast(const LowerBidiagonal& b);

/// Same recurrences on qd arrays: q_j = d_j^2 (length n), e_j = s_j^2
/// (length n - 1). Requires every q_j > 0. n may be 1.
TracePair traces_from_qd(std::span<const double> q, std::span<const double> e);

/// Traces of (T - lambda I)^-1 and its square. Throws
/// NotPositiveDefiniteError carrying the first nonpositive pivot when
/// lambda >= lambda_min(T).
ShiftedTracePair shifted_traces(const SymTridiagonal& t, double lambda);

}  // namespace eigenfloor
