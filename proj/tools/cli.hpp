#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace erasurelab::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Runs one command line. Exit codes: 0 pass, 1 verified failure or not
/// found, 2 usage or internal error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace erasurelab::cli
