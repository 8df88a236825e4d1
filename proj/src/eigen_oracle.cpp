#include "eigenfloor/eigen_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "eigenfloor/errors.hpp"

namespace eigenfloor {

namespace {

constexpr double kTiny = std::numeric_limits<double>::min();

void require_tol(double tol) {
    if (!(tol >= 0.0) || !std::isfinite(tol)) throw DomainError("tolerance must be finite and >= 0");
}

// Converged when the bracket is within tol or no representable midpoint remains.
bool bracket_done(double lo, double hi, double mid, double width_tol) {
    return hi - lo <= width_tol || mid <= lo || mid >= hi;
}

// k-th smallest eigenvalue of T (k = 0 is the smallest).
double bisect_tridiagonal(const SymTridiagonal& t, std::size_t k, double lo, double hi, double tol) {
    for (;;) {
        const double mid = lo + 0.5 * (hi - lo);
        if (bracket_done(lo, hi, mid, 2.0 * tol)) return mid;
        if (sturm_count(t, mid) > k) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
}

struct TridiagonalBracket {
    double lo;
    double hi;
};

TridiagonalBracket outer_bracket(const SymTridiagonal& t) {
    const double span = std::max(t.norm_bound(), kTiny);
    const double pad = 4.0 * std::numeric_limits<double>::epsilon() * span + kTiny;
    return {t.gershgorin_lower() - pad, t.gershgorin_upper() + pad};
}

struct QdArrays {
    std::vector<double> q;
    std::vector<double> e;
};

QdArrays squared_entries(const LowerBidiagonal& b) {
    b.require_nonsingular();
    QdArrays out{std::vector<double>(b.size()), std::vector<double>(b.size() - 1)};
    for (std::size_t i = 0; i < b.size(); ++i) out.q[i] = b.diag()[i] * b.diag()[i];
    for (std::size_t i = 0; i + 1 < b.size(); ++i) out.e[i] = b.sub()[i] * b.sub()[i];
    return out;
}

// k-th smallest eigenvalue of B B^T to relative width tol.
double bisect_qd(const QdArrays& a, std::size_t k, double hi, double tol) {
    double lo = 0.0;
    const double floor = 16.0 * kTiny;
    if (qd_count_below(a.q, a.e, floor) <= k) lo = floor;
    for (;;) {
        double mid;
        if (lo > 0.0 && hi > 4.0 * lo) {
            mid = std::sqrt(lo) * std::sqrt(hi);
        } else {
            mid = lo + 0.5 * (hi - lo);
        }
        if (bracket_done(lo, hi, mid, tol * (lo + hi))) return lo + 0.5 * (hi - lo);
        if (qd_count_below(a.q, a.e, mid) > k) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
}

double qd_upper_bound(const QdArrays& a) {
    double f = 0.0;
    for (double v : a.q) f += v;
    for (double v : a.e) f += v;
    return f * (1.0 + 1e-12) + kTiny;
}

}  // namespace

std::size_t sturm_count(const SymTridiagonal& t, double sigma) {
    const auto d = t.diag();
    const auto off = t.offdiag();
    const double pivmin = std::max(std::ldexp(t.norm_bound(), -96), kTiny);
    std::size_t count = 0;
    double p = d[0] - sigma;
    for (std::size_t i = 0;; ++i) {
        if (p == 0.0) p = pivmin;
        if (p < 0.0) ++count;
        if (i + 1 == d.size()) break;
        p = (d[i + 1] - sigma) - off[i] * (off[i] / p);
    }
    return count;
}

std::size_t qd_count_below(std::span<const double> q, std::span<const double> e, double mu) {
    const std::size_t n = q.size();
    std::size_t count = 0;
    double s = -mu;
    for (std::size_t i = 0; i < n; ++i) {
        double d = q[i] + s;
        if (d == 0.0) d = kTiny;
        if (d < 0.0) ++count;
        if (i + 1 == n) break;
        // s e / d with s / d -> 1 once s has overflowed
        const double ratio = std::isinf(s) ? 1.0 : s / d;
        s = e[i] * ratio - mu;
    }
    return count;
}

double smallest_eigenvalue(const SymTridiagonal& t, double tol) {
    require_tol(tol);
    auto [lo, hi] = outer_bracket(t);
    if (sturm_count(t, 0.0) == 0) lo = std::max(lo, 0.0);
    return bisect_tridiagonal(t, 0, lo, hi, 0.5 * tol);
}

EigenResult full_spectrum_serial(const SymTridiagonal& t, double tol) {
    require_tol(tol);
    const auto [lo, hi] = outer_bracket(t);
    const std::size_t m = t.size();
    EigenResult r{std::vector<double>(m), tol, false};
    for (std::size_t k = 0; k < m; ++k) {
        r.values[m - 1 - k] = bisect_tridiagonal(t, k, lo, hi, tol);
    }
    return r;
}

EigenResult full_spectrum(const SymTridiagonal& t, double tol) {
    require_tol(tol);
    const auto [lo, hi] = outer_bracket(t);
    const auto m = static_cast<std::ptrdiff_t>(t.size());
    EigenResult r{std::vector<double>(t.size()), tol, false};
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < m; ++k) {
        r.values[static_cast<std::size_t>(m - 1 - k)] =
            bisect_tridiagonal(t, static_cast<std::size_t>(k), lo, hi, tol);
    }
    return r;
}

EigenResult bidiagonal_singular_values_serial(const LowerBidiagonal& b, double tol) {
    require_tol(tol);
    const QdArrays a = squared_entries(b);
    const double hi = qd_upper_bound(a);
    const std::size_t m = b.size();
    EigenResult r{std::vector<double>(m), tol, true};
    for (std::size_t k = 0; k < m; ++k) {
        r.values[m - 1 - k] = std::sqrt(bisect_qd(a, k, hi, tol));
    }
    return r;
}

EigenResult bidiagonal_singular_values(const LowerBidiagonal& b, double tol) {
    require_tol(tol);
    const QdArrays a = squared_entries(b);
    const double hi = qd_upper_bound(a);
    const auto m = static_cast<std::ptrdiff_t>(b.size());
    EigenResult r{std::vector<double>(b.size()), tol, true};
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < m; ++k) {
        r.values[static_cast<std::size_t>(m - 1 - k)] =
            std::sqrt(bisect_qd(a, static_cast<std::size_t>(k), hi, tol));
    }
    return r;
}

}  // namespace eigenfloor
