#pragma once

#include <iosfwd>

namespace eigenfloor::cli {

// Exit codes; stable contract for scripts.
enum ExitCode : int {
    kOk = 0,
    kParseError = 1,
    kInfeasible = 2,
    kIoError = 3,
    kVerificationFailed = 4,
    kConvergenceFailed = 5,
};

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eigenfloor::cli
