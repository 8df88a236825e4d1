#include "eigenfloor/sweep.hpp"

#include <exception>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "eigenfloor/bounds.hpp"
#include "eigenfloor/errors.hpp"
#include "eigenfloor/format.hpp"

namespace eigenfloor {

namespace {

// Keeps the first exception thrown inside a parallel loop for rethrow after it.
class ParallelErrors {
public:
    template <typename F>
    void run(F&& f) noexcept {
        try {
            f();
        } catch (...) {
#pragma omp critical(eigenfloor_parallel_errors)
            if (!first_) first_ = std::current_exception();
        }
    }
    void rethrow() const {
        if (first_) std::rethrow_exception(first_);
    }

private:
    std::exception_ptr first_;
};

}  // namespace

SweepRow sweep_row(int m, std::uint64_t seed, std::int64_t sample_id) {
    const Spectrum raw = random_spd_spectrum(m, mix_seed(seed, static_cast<std::uint64_t>(sample_id)));
    const Spectrum s = normalize_unit_inverse_trace(raw);
    const BoundReport r = bound_report(spectrum_to_tracepair(s));
    SweepRow row;
    row.sample_id = sample_id;
    row.alpha = r.alpha;
    row.lambda_min = s.smallest();
    row.laguerre = r.laguerre;
    row.gap_upper = r.gap_upper;
    row.newton = r.newton;
    row.bailey = r.bailey;
    row.householder = r.householder;
    return row;
}

std::vector<SweepRow> sweep_rows_serial(int m, std::int64_t samples, std::uint64_t seed) {
    std::vector<SweepRow> rows(static_cast<std::size_t>(samples));
    for (std::int64_t i = 0; i < samples; ++i) rows[static_cast<std::size_t>(i)] = sweep_row(m, seed, i);
    return rows;
}

std::vector<SweepRow> sweep_rows(int m, std::int64_t samples, std::uint64_t seed) {
    std::vector<SweepRow> rows(static_cast<std::size_t>(samples));
    ParallelErrors errors;
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < samples; ++i) {
        errors.run([&] { rows[static_cast<std::size_t>(i)] = sweep_row(m, seed, i); });
    }
    errors.rethrow();
    return rows;
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows) {
    out << kSweepCsvVersion << '\n' << kSweepCsvHeader << '\n';
    for (const SweepRow& r : rows) {
        out << r.sample_id << ',' << format_real(r.alpha) << ',' << format_real(r.lambda_min) << ','
            << format_real(r.laguerre) << ',' << format_real(r.gap_upper) << ',' << format_real(r.newton) << ','
            << format_real(r.bailey) << ',' << format_real(r.householder) << '\n';
    }
}

std::vector<SweepRow> read_sweep_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kSweepCsvVersion) throw ParseError("missing sweep CSV version line");
    if (!std::getline(in, line) || line != kSweepCsvHeader) throw ParseError("unexpected sweep CSV header");
    std::vector<SweepRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string f[8];
        for (int i = 0; i < 8; ++i) {
            if (!std::getline(ss, f[i], ',')) throw ParseError("short sweep CSV row: " + line);
        }
        SweepRow r;
        r.sample_id = static_cast<std::int64_t>(parse_real(f[0]));
        r.alpha = parse_real(f[1]);
        r.lambda_min = parse_real(f[2]);
        r.laguerre = parse_real(f[3]);
        r.gap_upper = parse_real(f[4]);
        r.newton = parse_real(f[5]);
        r.bailey = parse_real(f[6]);
        r.householder = parse_real(f[7]);
        rows.push_back(r);
    }
    return rows;
}

std::vector<BoundReport> bound_reports_serial(std::span<const TracePair> pairs) {
    std::vector<BoundReport> out(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) out[i] = bound_report(pairs[i]);
    return out;
}

std::vector<BoundReport> bound_reports(std::span<const TracePair> pairs) {
    std::vector<BoundReport> out(pairs.size());
    const auto n = static_cast<std::ptrdiff_t>(pairs.size());
    ParallelErrors errors;
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        errors.run([&] { out[k] = bound_report(pairs[k]); });
    }
    errors.rethrow();
    return out;
}

}  // namespace eigenfloor
