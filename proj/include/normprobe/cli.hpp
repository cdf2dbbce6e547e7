#pragma once

#include "normprobe/config.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace normprobe::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_incomplete = 2;

/// Parses `args` (without the program name) and runs the subcommand.
/// Returns 0 on success, 1 on usage or input errors, 2 when a run stopped
/// before completion with its records persisted.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
             const EnvLookup& env = process_env());

} // namespace normprobe::cli
