#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sigmakl::cli {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInvariant = 3;

/// Runs one command line (without the program name). Output goes to `out`
/// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sigmakl::cli
