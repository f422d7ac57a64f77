#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ltibound {

/// Command-line front end. args is argv without the program name.
///
/// Subcommands:
///   decide --mode {continuous|discrete} FILE [--trace] [--no-timings]
///   minpoly FILE
///   check-poly [--discrete] [--trace] [--no-timings] C0 C1 ... CD
///   det FILE
///
/// decide/check-poly print YES or NO on the first stdout line and return 0
/// for YES, 1 for NO; usage, parse or input errors return 2 with a
/// diagnostic on err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ltibound
