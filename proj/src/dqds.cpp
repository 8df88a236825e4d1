#include "eigenfloor/dqds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "eigenfloor/bounds.hpp"
#include "eigenfloor/traces.hpp"

namespace eigenfloor {

ShiftKind parse_shift_kind(std::string_view name) {
    if (name == "zero") return ShiftKind::zero;
    if (name == "newton2") return ShiftKind::newton2;
    if (name == "laguerre") return ShiftKind::laguerre;
    throw ParseError("unknown shift strategy '" + std::string(name) + "'");
}

std::string_view to_string(ShiftKind kind) {
    switch (kind) {
        case ShiftKind::zero: return "zero";
        case ShiftKind::newton2: return "newton2";
        case ShiftKind::laguerre: return "laguerre";
    }
    return "unknown";
}

QdArrays qd_from_bidiagonal(const LowerBidiagonal& b) {
    b.require_nonsingular();
    QdArrays s;
    s.q.resize(b.size());
    s.e.resize(b.size() - 1);
    for (std::size_t i = 0; i < b.size(); ++i) s.q[i] = b.diag()[i] * b.diag()[i];
    for (std::size_t i = 0; i + 1 < b.size(); ++i) s.e[i] = b.sub()[i] * b.sub()[i];
    return s;
}

QdArrays dqds_step(const QdArrays& state, double shift) {
    const std::size_t n = state.q.size();
    QdArrays out;
    out.q.resize(n);
    out.e.resize(n > 0 ? n - 1 : 0);
    out.sigma_accum = state.sigma_accum + shift;

    double d = state.q[0] - shift;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (!(d > 0.0)) throw ShiftRejected(i, shift);
        const double qhat = d + state.e[i];
        const double t = state.q[i + 1] / qhat;
        out.q[i] = qhat;
        out.e[i] = state.e[i] * t;
        d = d * t - shift;
    }
    if (!(d > 0.0)) throw ShiftRejected(n - 1, shift);
    out.q[n - 1] = d;
    return out;
}

ShiftChoice choose_shift(const ShiftStrategy& strategy, const QdArrays& state) {
    if (strategy.kind == ShiftKind::zero) return {0.0, false};
    try {
        const TracePair tp = traces_from_qd(state.q, state.e);
        const double bound = strategy.kind == ShiftKind::newton2 ? newton_bound(tp) : laguerre_bound(tp);
        return {strategy.safety_factor * bound, false};
    } catch (const Error&) {
        return {0.0, true};
    }
}

namespace {

struct Block {
    std::vector<double> q;
    std::vector<double> e;
    double sigma = 0.0;
};

// Index of the last negligible interior coupling, or npos.
std::size_t find_split(const Block& b, double tol2) {
    for (std::size_t i = b.e.size(); i-- > 0;) {
        if (b.e[i] <= tol2 * std::sqrt(b.q[i] * b.q[i + 1])) return i;
    }
    return static_cast<std::size_t>(-1);
}

}  // namespace

DqdsReport run_dqds(const LowerBidiagonal& b, const ShiftStrategy& strategy, const DqdsOptions& opts) {
    if (!(opts.tol > 0.0)) throw DomainError("run_dqds: tol must be positive");
    if (!(strategy.safety_factor > 0.0 && strategy.safety_factor <= 1.0)) {
        throw DomainError("run_dqds: safety_factor must lie in (0, 1]");
    }
    QdArrays init = qd_from_bidiagonal(b);
    // q and e hold squares, so entry-level tolerances enter squared
    const double tol2 = opts.tol * opts.tol;
    const int max_sweeps = opts.sweeps_per_row * static_cast<int>(b.size());

    DqdsReport report;
    std::vector<Block> stack;
    stack.push_back({std::move(init.q), std::move(init.e), 0.0});

    while (!stack.empty()) {
        Block& blk = stack.back();

        // Deflate converged trailing entries.
        while (blk.q.size() > 1) {
            const std::size_t n = blk.q.size();
            const double e = blk.e[n - 2];
            if (e > tol2 * (blk.sigma + blk.q[n - 1]) && e > tol2 * blk.q[n - 2]) break;
            report.singular_values.push_back(std::sqrt(blk.q[n - 1] + blk.sigma));
            blk.q.pop_back();
            blk.e.pop_back();
        }
        if (blk.q.size() == 1) {
            report.singular_values.push_back(std::sqrt(blk.q[0] + blk.sigma));
            stack.pop_back();
            continue;
        }

        const std::size_t split = find_split(blk, tol2);
        if (split != static_cast<std::size_t>(-1)) {
            const auto cut = static_cast<std::ptrdiff_t>(split + 1);
            Block lower{{blk.q.begin() + cut, blk.q.end()}, {blk.e.begin() + cut, blk.e.end()}, blk.sigma};
            blk.q.resize(split + 1);
            blk.e.resize(split);
            stack.push_back(std::move(lower));
            continue;
        }

        if (report.iterations >= max_sweeps) {
            std::sort(report.singular_values.begin(), report.singular_values.end(), std::greater<>());
            throw DqdsConvergenceError("dqds did not converge within " + std::to_string(max_sweeps) + " sweeps",
                                       report);
        }

        QdArrays state{blk.q, blk.e, blk.sigma};
        const ShiftChoice choice = choose_shift(strategy, state);
        if (choice.failed) ++report.failures;

        double shift = choice.shift;
        QdArrays next;
        for (int attempt = 0;; ++attempt) {
            try {
                next = dqds_step(state, shift);
                break;
            } catch (const ShiftRejected& e) {
                ++report.failures;
                if (shift == 0.0) {
                    throw DqdsConvergenceError(std::string("zero shift rejected: ") + e.what(), report);
                }
                shift = attempt < opts.max_retries ? 0.5 * shift : 0.0;
            }
        }

        blk.q = std::move(next.q);
        blk.e = std::move(next.e);
        blk.sigma = next.sigma_accum;
        ++report.iterations;
        report.shifts_applied.push_back(shift);
        report.log.push_back({report.iterations, shift, *std::min_element(blk.q.begin(), blk.q.end())});
    }

    std::sort(report.singular_values.begin(), report.singular_values.end(), std::greater<>());
    return report;
}

}  // namespace eigenfloor
