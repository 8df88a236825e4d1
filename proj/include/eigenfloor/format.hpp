#pragma once

#include <string>

namespace eigenfloor {

/// Shortest decimal form that parses back to the same double (at most 17
/// significant digits).
std::string format_real(double v);

/// Parses a whole token as a double; throws ParseError.
double parse_real(const std::string& token);

}  // namespace eigenfloor
