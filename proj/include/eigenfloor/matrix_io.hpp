#pragma once

// Text matrix format:
//
//   tri | bidiag
//   m
//   d_0 ... d_{m-1}
//   o_0 ... o_{m-2}      (offdiagonal for tri, subdiagonal for bidiag)
//
// Numbers are written in shortest round-trip form.

#include <filesystem>
#include <iosfwd>
#include <variant>

#include "eigenfloor/spectral.hpp"

namespace eigenfloor {

using MatrixInput = std::variant<SymTridiagonal, LowerBidiagonal>;

/// Throws ParseError on malformed input (including m < 2).
MatrixInput parse_matrix(std::istream& in);

/// Throws IoError when the file cannot be opened, ParseError otherwise.
MatrixInput read_matrix_file(const std::filesystem::path& path);

void write_matrix(std::ostream& out, const SymTridiagonal& t);
void write_matrix(std::ostream& out, const LowerBidiagonal& b);

/// Random nonsingular bidiagonal with entries log-uniform in [lo, hi],
/// deterministic per seed.
LowerBidiagonal random_bidiagonal(std::size_t m, std::uint64_t seed, double lo = 0.1, double hi = 10.0);

}  // namespace eigenfloor
