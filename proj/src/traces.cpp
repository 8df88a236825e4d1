#include "eigenfloor/traces.hpp"

#include <cmath>
#include <vector>

#include "eigenfloor/errors.hpp"

namespace eigenfloor {

namespace {

// inv_pivot(j) = 1/D_j and ratio(j) = r_j as described in the header; both
// throw OverflowError when their value leaves the double range.
template <class InvPivot, class Ratio>
TracePair two_sweep_traces(std::size_t n, InvPivot inv_pivot, Ratio ratio) {
    // reused across calls so large inputs do not pay for fresh pages each time
    thread_local std::vector<double> carry;  // Q_j
    carry.resize(n);
    double q = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        carry[j] = q;
        const double inv = inv_pivot(j);
        if (j + 1 < n) {
            q = ratio(j) * (q + inv);
            if (!std::isfinite(q)) throw OverflowError(j);
        }
    }

    double a = 0.0;
    double b = 0.0;
    double tail = 1.0;  // t_j
    for (std::size_t k = n; k-- > 0;) {
        if (k + 1 < n) tail = 1.0 + ratio(k) * tail;
        const double col = tail * inv_pivot(k);
        a += col;
        b += col * (col + 2.0 * tail * carry[k]);
        if (!std::isfinite(b)) throw OverflowError(k);
    }
    return {a, b, static_cast<int>(n)};
}

double checked(double v, std::size_t index) {
    if (!std::isfinite(v)) throw OverflowError(index);
    return v;
}

}  // namespace

TracePair traces_oracle(const LowerBidiagonal& bd) {
    bd.require_nonsingular();
    const auto d = bd.diag();
    const auto s = bd.sub();
    const std::size_t m = bd.size();

    std::vector<double> y(m);
    std::vector<double> x(m);
    double a = 0.0;
    double b = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        // y = B^-1 e_j, zero above row j
        std::fill(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(j), 0.0);
        y[j] = 1.0 / d[j];
        for (std::size_t i = j + 1; i < m; ++i) {
            y[i] = -s[i - 1] * y[i - 1] / d[i];
        }
        // x = B^-T y = A^-1 e_j
        x[m - 1] = y[m - 1] / d[m - 1];
        for (std::size_t i = m - 1; i-- > 0;) {
            x[i] = (y[i] - s[i] * x[i + 1]) / d[i];
        }
        for (std::size_t i = j; i < m; ++i) a += y[i] * y[i];
        for (std::size_t i = 0; i < m; ++i) b += x[i] * x[i];
    }
    return {a, b, static_cast<int>(m)};
}

TracePair traces_fast(const LowerBidiagonal& bd) {
    bd.require_nonsingular();
    const auto d = bd.diag();
    const auto s = bd.sub();
    return two_sweep_traces(
        bd.size(),
        [d](std::size_t j) {
            const double r = 1.0 / d[j];
            return checked(r * r, j);
        },
        [d, s](std::size_t j) {
            const double r = s[j] / d[j + 1];
            return checked(r * r, j + 1);
        });
}

TracePair traces_from_qd(std::span<const double> q, std::span<const double> e) {
    for (double v : q) {
        if (!(v > 0.0)) throw DomainError("qd array entry is not positive");
    }
    return two_sweep_traces(
        q.size(), [q](std::size_t j) { return checked(1.0 / q[j], j); },
        [q, e](std::size_t j) { return checked(e[j] / q[j + 1], j + 1); });
}

ShiftedTracePair shifted_traces(const SymTridiagonal& t, double lambda) {
    const auto piv = t.ldlt_pivots(lambda);
    const std::size_t m = t.size();
    if (piv.size() < m || !(piv.back() > 0.0)) {
        throw NotPositiveDefiniteError(piv.size() - 1, piv.back());
    }
    const auto off = t.offdiag();
    const TracePair tp = two_sweep_traces(
        m, [&piv](std::size_t j) { return checked(1.0 / piv[j], j); },
        [&piv, off](std::size_t j) {
            // l_j^2 D_j / D_{j+1} = off_j^2 / (D_j D_{j+1})
            return checked((off[j] / piv[j]) * (off[j] / piv[j + 1]), j + 1);
        });
    return {lambda, tp.a, tp.b};
}

}  // namespace eigenfloor
