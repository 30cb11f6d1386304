#pragma once

#include <ostream>

namespace hyperdfa {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInput = 2;

/// Entry point of the `hyperdfa` command-line tool. Subcommands: minimize,
/// blocks, hyperminimize, errors, gen, inspect, experiment.
int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hyperdfa
