#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ellvb/torus.hpp"

namespace ellvb::cli {

/// Exit codes: 0 success, 1 domain error, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name. Structured output goes
/// to `out`, diagnostics to `err`; `--input -` reads from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

/// Parses "a+bi" (no spaces); also "a", "bi", "-i". Throws ParseError.
Complex parse_complex(const std::string& text);

}  // namespace ellvb::cli
