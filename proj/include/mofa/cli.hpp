/**
 * @file cli.hpp
 * @brief Command-line front end: `run`, `front` and `bench` subcommands.
 */

#ifndef MOFA_CLI_HPP
#define MOFA_CLI_HPP

#include <iosfwd>

namespace mofa::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitRuntime = 2;

/// Parses argv and executes the subcommand. Never throws.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mofa::cli

#endif  // MOFA_CLI_HPP
