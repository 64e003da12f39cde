#ifndef GHS_CLI_HPP
#define GHS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ghs::cli {

inline constexpr const char* kVersion = "0.1.0";

// Runs one subcommand; returns the process exit code.
// 0 = success, 1 = a mathematical check failed, 2 = usage/bound/parse error.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace ghs::cli

#endif
