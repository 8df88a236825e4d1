#pragma once

// Batch kernels over independent samples. Each has an OpenMP version and a
// serial reference that must agree bit for bit; per-sample seeds are derived
// from (seed, sample_id) so results do not depend on scheduling.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "eigenfloor/spectral.hpp"

namespace eigenfloor {

inline constexpr std::string_view kSweepCsvVersion = "# eigenfloor-sweep v1";
inline constexpr std::string_view kSweepCsvHeader =
    "sample_id,alpha,lambda_min,laguerre,gap_upper,newton,bailey,householder";

struct SweepRow {
    std::int64_t sample_id = 0;
    double alpha = 0.0;
    double lambda_min = 0.0;
    double laguerre = 0.0;
    double gap_upper = 0.0;
    double newton = 0.0;
    double bailey = 0.0;
    double householder = 0.0;
};

/// One random spectrum normalized to Tr(A^-1) = 1 and its bounds.
SweepRow sweep_row(int m, std::uint64_t seed, std::int64_t sample_id);

std::vector<SweepRow> sweep_rows(int m, std::int64_t samples, std::uint64_t seed);
std::vector<SweepRow> sweep_rows_serial(int m, std::int64_t samples, std::uint64_t seed);

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows);
/// Throws ParseError.
std::vector<SweepRow> read_sweep_csv(std::istream& in);

std::vector<BoundReport> bound_reports(std::span<const TracePair> pairs);
std::vector<BoundReport> bound_reports_serial(std::span<const TracePair> pairs);

}  // namespace eigenfloor
