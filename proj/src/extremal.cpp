#include "eigenfloor/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "eigenfloor/bounds.hpp"
#include "eigenfloor/eigen_oracle.hpp"
#include "eigenfloor/errors.hpp"

namespace eigenfloor {

namespace {

std::vector<double> invert_all(const std::vector<double>& x) {
    std::vector<double> v(x.size());
    std::transform(x.begin(), x.end(), v.begin(), [](double r) { return 1.0 / r; });
    return v;
}

}  // namespace

ExtremalSpectrum laguerre_extremal_spectrum(const TracePair& tp) {
    require_feasible(tp);
    const double a = tp.a;
    const double b = tp.b;
    const double m = tp.m;
    const double root = std::sqrt(std::max(m * (m - 1.0) * b - (m - 1.0) * a * a, 0.0));
    const double x_top = (a + root) / m;
    // ((m-1)a - root) / (m(m-1)) rewritten without cancellation
    const double x_rest = (a * a - b) / ((m - 1.0) * a + root);

    std::vector<double> x(static_cast<std::size_t>(tp.m), x_rest);
    x.back() = x_top;
    return {Spectrum(invert_all(x)), ExtremalKind::laguerre_minimizer, 0.0};
}

ExtremalSpectrum gap_extremal_spectrum(const TracePair& tp, double epsilon) {
    require_feasible(tp);
    const int q = multiplicity_q(tp);
    const int slots = tp.m - q - 1;
    if (slots > 0 && !(epsilon > 0.0)) {
        throw DomainError("gap_extremal_spectrum: epsilon must be > 0 to stand in for infinite eigenvalues");
    }
    const double eps = slots > 0 ? epsilon : 0.0;
    const double a = tp.a - slots * eps;
    const double b = tp.b - slots * eps * eps;
    const double disc = q * ((q + 1.0) * b - a * a);
    const double lower_num = a * a - q * b;
    if (!(a > 0.0) || disc < -1e-14 * q * b || !(lower_num > 0.0)) {
        throw DomainError("gap_extremal_spectrum: epsilon too large for the trace pair");
    }
    const double root = std::sqrt(std::max(disc, 0.0));
    const double x_top = (a * q + root) / (q * (q + 1.0));
    // (a - root)/(q+1) rewritten without cancellation
    const double x_mid = lower_num / (a + root);
    if (slots > 0 && x_mid < eps) {
        throw DomainError("gap_extremal_spectrum: epsilon exceeds the intermediate reciprocal");
    }

    std::vector<double> x;
    x.reserve(static_cast<std::size_t>(tp.m));
    x.insert(x.end(), static_cast<std::size_t>(slots), eps);
    x.push_back(x_mid);
    x.insert(x.end(), static_cast<std::size_t>(q), x_top);
    return {Spectrum(invert_all(x)), ExtremalKind::gap_maximizer, eps};
}

std::array<double, 3> trace_preserving_perturbation(double x, double y, double z, double epsilon) {
    if (!(epsilon > 0.0)) throw DomainError("perturbation: epsilon must be positive");
    if (!(x > y && y >= z && z >= 0.0)) throw DomainError("perturbation: requires x > y >= z >= 0");
    const double lin = y - z - epsilon;
    const double cst = x - z - epsilon;
    if (!(cst > 0.0)) throw DomainError("perturbation: requires x - z - epsilon > 0");
    const double disc = lin * lin + 4.0 * epsilon * cst;
    if (disc < 0.0) throw DomainError("perturbation: negative discriminant");
    const double root = std::sqrt(disc);
    // t+ epsilon, choosing the form without cancellation
    const double step = lin > 0.0 ? 2.0 * cst * epsilon / (lin + root) : 0.5 * (root - lin);

    const double x1 = x - epsilon;
    double y1 = y + step;
    double z1 = z + (epsilon - step);
    if (y1 < z1) std::swap(y1, z1);
    return {x1, y1, z1};
}

AttainabilityReport verify_attainability(const TracePair& tp, double epsilon, double tol) {
    AttainabilityReport r;
    r.epsilon = epsilon;
    r.tol = tol;

    const ExtremalSpectrum low = laguerre_extremal_spectrum(tp);
    const ExtremalSpectrum high = gap_extremal_spectrum(tp, epsilon);
    const auto lam_min = [](const Spectrum& s) {
        return smallest_eigenvalue(SymTridiagonal::diagonal({s.values().begin(), s.values().end()}), 0.0);
    };

    r.laguerre_bound = laguerre_bound(tp);
    r.laguerre_lambda_min = lam_min(low.spectrum);
    r.laguerre_gap = std::abs(r.laguerre_lambda_min - r.laguerre_bound);
    r.laguerre_rel_gap = r.laguerre_gap / r.laguerre_bound;

    r.gap_upper = gap_upper_bound(tp);
    r.gap_lambda_min = lam_min(high.spectrum);
    r.gap_gap = std::abs(r.gap_lambda_min - r.gap_upper);
    r.gap_rel_gap = r.gap_gap / r.gap_upper;

    r.pass = r.laguerre_rel_gap <= tol && r.gap_rel_gap <= tol;
    return r;
}

}  // namespace eigenfloor
