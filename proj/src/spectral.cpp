#include "eigenfloor/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <string>

#include "eigenfloor/errors.hpp"

namespace eigenfloor {

namespace {

void require_all_finite(std::span<const double> v, const char* what) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!std::isfinite(v[i])) {
            throw DomainError(std::string(what) + " entry " + std::to_string(i) + " is not finite");
        }
    }
}

}  // namespace

bool is_feasible(const TracePair& tp) noexcept {
    if (tp.m < 2 || !(tp.a > 0.0) || !(tp.b > 0.0) || !std::isfinite(tp.a) || !std::isfinite(tp.b)) {
        return false;
    }
    const double a2 = tp.a * tp.a;
    return tp.b >= a2 / tp.m * (1.0 - kFeasibilitySlack) && tp.b < a2;
}

void require_feasible(const TracePair& tp) {
    if (tp.m < 2) {
        throw DomainError("dimension m must be at least 2, got " + std::to_string(tp.m));
    }
    if (!(tp.a > 0.0) || !std::isfinite(tp.a)) {
        throw DomainError("Tr(A^-1) must be positive and finite");
    }
    if (!(tp.b > 0.0) || !std::isfinite(tp.b)) {
        throw DomainError("Tr(A^-2) must be positive and finite");
    }
    const double a2 = tp.a * tp.a;
    if (tp.b < a2 / tp.m * (1.0 - kFeasibilitySlack)) {
        throw DomainError("infeasible trace pair: b/a^2 < 1/m");
    }
    if (!(tp.b < a2)) {
        throw DomainError("infeasible trace pair: b/a^2 >= 1");
    }
}

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
    if (values_.size() < 2) {
        throw DomainError("a spectrum needs at least 2 eigenvalues");
    }
    for (double v : values_) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw DomainError("eigenvalues must be positive and finite");
        }
    }
    std::sort(values_.begin(), values_.end(), std::greater<>());
}

std::vector<double> Spectrum::reciprocals() const {
    std::vector<double> x(values_.size());
    std::transform(values_.begin(), values_.end(), x.begin(), [](double v) { return 1.0 / v; });
    return x;
}

SymTridiagonal::SymTridiagonal(std::vector<double> diag, std::vector<double> offdiag)
    : diag_(std::move(diag)), offdiag_(std::move(offdiag)) {
    if (diag_.size() < 2) {
        throw DomainError("tridiagonal matrix needs m >= 2");
    }
    if (offdiag_.size() + 1 != diag_.size()) {
        throw DomainError("offdiagonal length must be m - 1");
    }
    require_all_finite(diag_, "diagonal");
    require_all_finite(offdiag_, "offdiagonal");
}

SymTridiagonal SymTridiagonal::diagonal(std::vector<double> diag) {
    const std::size_t m = diag.size();
    return SymTridiagonal(std::move(diag), std::vector<double>(m == 0 ? 0 : m - 1, 0.0));
}

std::vector<double> SymTridiagonal::ldlt_pivots(double shift) const {
    std::vector<double> piv;
    piv.reserve(diag_.size());
    double p = diag_[0] - shift;
    piv.push_back(p);
    for (std::size_t i = 1; i < diag_.size() && p > 0.0; ++i) {
        p = (diag_[i] - shift) - offdiag_[i - 1] * (offdiag_[i - 1] / p);
        piv.push_back(p);
    }
    return piv;
}

bool SymTridiagonal::is_positive_definite(double shift) const {
    const auto piv = ldlt_pivots(shift);
    return piv.size() == diag_.size() && piv.back() > 0.0;
}

double SymTridiagonal::gershgorin_lower() const noexcept {
    double lo = diag_[0] - std::abs(offdiag_[0]);
    for (std::size_t i = 1; i < diag_.size(); ++i) {
        double r = std::abs(offdiag_[i - 1]);
        if (i + 1 < diag_.size()) r += std::abs(offdiag_[i]);
        lo = std::min(lo, diag_[i] - r);
    }
    return lo;
}

double SymTridiagonal::gershgorin_upper() const noexcept {
    double hi = diag_[0] + std::abs(offdiag_[0]);
    for (std::size_t i = 1; i < diag_.size(); ++i) {
        double r = std::abs(offdiag_[i - 1]);
        if (i + 1 < diag_.size()) r += std::abs(offdiag_[i]);
        hi = std::max(hi, diag_[i] + r);
    }
    return hi;
}

double SymTridiagonal::norm_bound() const noexcept {
    double n = 0.0;
    for (std::size_t i = 0; i < diag_.size(); ++i) {
        double r = std::abs(diag_[i]);
        if (i > 0) r += std::abs(offdiag_[i - 1]);
        if (i + 1 < diag_.size()) r += std::abs(offdiag_[i]);
        n = std::max(n, r);
    }
    return n;
}

LowerBidiagonal::LowerBidiagonal(std::vector<double> diag, std::vector<double> sub)
    : diag_(std::move(diag)), sub_(std::move(sub)) {
    if (diag_.size() < 2) {
        throw DomainError("bidiagonal matrix needs m >= 2");
    }
    if (sub_.size() + 1 != diag_.size()) {
        throw DomainError("subdiagonal length must be m - 1");
    }
    require_all_finite(diag_, "diagonal");
    require_all_finite(sub_, "subdiagonal");
}

LowerBidiagonal LowerBidiagonal::identity(std::size_t m) {
    return LowerBidiagonal(std::vector<double>(m, 1.0), std::vector<double>(m == 0 ? 0 : m - 1, 0.0));
}

bool LowerBidiagonal::is_nonsingular() const noexcept {
    return std::none_of(diag_.begin(), diag_.end(), [](double d) { return d == 0.0; });
}

void LowerBidiagonal::require_nonsingular() const {
    for (std::size_t i = 0; i < diag_.size(); ++i) {
        if (diag_[i] == 0.0) throw SingularMatrixError(i);
    }
}

TracePair spectrum_to_tracepair(const Spectrum& s) {
    // Values are non-increasing, so reciprocals are summed smallest first.
    double a = 0.0;
    double b = 0.0;
    for (double v : s.values()) {
        const double x = 1.0 / v;
        a += x;
        b += x * x;
    }
    return {a, b, static_cast<int>(s.size())};
}

SymTridiagonal bidiagonal_gram(const LowerBidiagonal& b) {
    const auto d = b.diag();
    const auto s = b.sub();
    const std::size_t m = b.size();
    std::vector<double> diag(m);
    std::vector<double> off(m - 1);
    for (std::size_t i = 0; i < m; ++i) {
        diag[i] = d[i] * d[i] + (i > 0 ? s[i - 1] * s[i - 1] : 0.0);
    }
    for (std::size_t i = 0; i + 1 < m; ++i) {
        off[i] = d[i] * s[i];
    }
    return SymTridiagonal(std::move(diag), std::move(off));
}

Spectrum normalize_unit_inverse_trace(const Spectrum& s) {
    const double a = spectrum_to_tracepair(s).a;
    std::vector<double> v(s.values().begin(), s.values().end());
    for (double& x : v) x *= a;
    return Spectrum(std::move(v));
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Spectrum random_spd_spectrum(int m, std::uint64_t seed) {
    if (m < 2) {
        throw DomainError("random spectrum needs m >= 2");
    }
    static const double log_lo = std::log(1e-3);
    static const double log_hi = std::log(1e3);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double width = unit(rng) * (log_hi - log_lo);
    const double left = log_lo + unit(rng) * (log_hi - log_lo - width);

    std::vector<double> v(static_cast<std::size_t>(m));
    for (double& x : v) {
        x = std::exp(left + width * unit(rng));
    }
    return Spectrum(std::move(v));
}

}  // namespace eigenfloor
