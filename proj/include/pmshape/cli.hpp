/**
 * @file cli.hpp
 * @brief Command-line front end, callable in-process.
 *
 * Exit codes: 0 success, 1 usage error (bad flags or argument values),
 * 2 data error (unreadable input, degenerate shape or image, orientation
 * undefined). Diagnostics go to the error stream as "error: <kind>: <detail>".
 */
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pmshape {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pmshape
