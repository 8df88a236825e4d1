#include "eigenfloor/format.hpp"

#include <array>
#include <charconv>

#include "eigenfloor/errors.hpp"

namespace eigenfloor {

std::string format_real(double v) {
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

double parse_real(const std::string& token) {
    double v = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (first != last && *first == '+') ++first;
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || res.ptr != last) {
        throw ParseError("not a number: '" + token + "'");
    }
    return v;
}

}  // namespace eigenfloor
