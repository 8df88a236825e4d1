#pragma once

// Domain types shared by every module: trace pairs, spectra, and the two
// structured matrix representations (symmetric tridiagonal A and its lower
// bidiagonal Cholesky-type factor B with A = B B^T).

#include <cstdint>
#include <span>
#include <vector>

namespace eigenfloor {

/// Tr(A^-1), Tr(A^-2) and the dimension m of a symmetric positive definite A.
///
/// Any such pair satisfies a^2/m <= b < a^2. The lower edge is attained
/// only by a multiple of the identity.
struct TracePair {
    double a = 0.0;
    double b = 0.0;
    int m = 0;
};

/// Relative slack on the lower feasibility edge b >= a^2/m, so that constant
/// spectra survive rounding in the trace sums.
inline constexpr double kFeasibilitySlack = 1e-12;

bool is_feasible(const TracePair& tp) noexcept;

/// Throws DomainError naming the violated condition.
void require_feasible(const TracePair& tp);

/// Eigenvalues sorted non-increasing, all finite and strictly positive, m >= 2.
class Spectrum {
public:
    /// Sorts the input; throws DomainError on size < 2 or a nonpositive or
    /// non-finite value.
    explicit Spectrum(std::vector<double> values);

    std::span<const double> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    double largest() const noexcept { return values_.front(); }
    double smallest() const noexcept { return values_.back(); }

    /// x_k = 1/lambda_k, same order as values() (so non-decreasing).
    std::vector<double> reciprocals() const;

private:
    std::vector<double> values_;
};

class SymTridiagonal {
public:
    /// diag has length m >= 2 and offdiag length m - 1.
    SymTridiagonal(std::vector<double> diag, std::vector<double> offdiag);

    static SymTridiagonal diagonal(std::vector<double> diag);

    std::size_t size() const noexcept { return diag_.size(); }
    std::span<const double> diag() const noexcept { return diag_; }
    std::span<const double> offdiag() const noexcept { return offdiag_; }

    /// Pivots of the LDL^T factorization of (T - shift*I), computed until the
    /// first nonpositive pivot (inclusive). A full-length result with every
    /// entry > 0 certifies positive definiteness.
    std::vector<double> ldlt_pivots(double shift = 0.0) const;
    bool is_positive_definite(double shift = 0.0) const;

    double gershgorin_lower() const noexcept;
    double gershgorin_upper() const noexcept;
    /// max |T_ij| row sum; a cheap norm bound.
    double norm_bound() const noexcept;

private:
    std::vector<double> diag_;
    std::vector<double> offdiag_;
};

/// Lower bidiagonal B: diag on the main diagonal, sub[i] = B(i+1, i).
class LowerBidiagonal {
public:
    LowerBidiagonal(std::vector<double> diag, std::vector<double> sub);

    static LowerBidiagonal identity(std::size_t m);

    std::size_t size() const noexcept { return diag_.size(); }
    std::span<const double> diag() const noexcept { return diag_; }
    std::span<const double> sub() const noexcept { return sub_; }

    bool is_nonsingular() const noexcept;
    /// Throws SingularMatrixError carrying the first zero diagonal index.
    void require_nonsingular() const;

private:
    std::vector<double> diag_;
    std::vector<double> sub_;
};

/// The four trace-based lower bounds on lambda_min together with the shape
/// ratio alpha, the multiplicity q, the supremum gap_upper of lambda_min over
/// all matrices sharing the trace pair, and gap_ratio = laguerre / gap_upper.
struct BoundReport {
    double newton = 0.0;
    double bailey = 0.0;
    double householder = 0.0;
    double laguerre = 0.0;
    double alpha = 0.0;
    int q = 0;
    double gap_upper = 0.0;
    double gap_ratio = 0.0;
};

TracePair spectrum_to_tracepair(const Spectrum& s);

/// T = B B^T.
SymTridiagonal bidiagonal_gram(const LowerBidiagonal& b);

/// Scales the spectrum by Tr(A^-1) so that the new pair is (1, b/a^2, m).
Spectrum normalize_unit_inverse_trace(const Spectrum& s);

/// Deterministic random spectrum with support in [1e-3, 1e3].
///
/// Each draw first picks a log-width w ~ U(0, ln 1e6) and a window
/// [lo, lo + w] inside [ln 1e-3, ln 1e3], then draws m eigenvalues
/// log-uniformly in that window. Narrow windows populate alpha close to 1/m,
/// wide ones the alpha > 1/2 regime.
Spectrum random_spd_spectrum(int m, std::uint64_t seed);

/// splitmix64 finalizer; used to derive independent per-sample seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

}  // namespace eigenfloor
