#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace abc::cli {

enum ExitCode : int {
    kSuccess = 0,
    kFailure = 1,
    kInvalidInput = 2,
    kResourceLimit = 3,
};

/// Runs one CLI invocation. argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// 12 significant digits; "nan"/"inf" for non-finite values.
std::string format_real(double x);

/// Accepts "1000", "1e9" and "10^9".
std::uint64_t parse_count(std::string_view text);

} // namespace abc::cli
