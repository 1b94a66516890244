#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "heunpot/app/config.hpp"
#include "heunpot/app/report.hpp"

namespace heunpot::app {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitIo = 3;

/// Invariant coefficients, Fuchsian check, induced ansatz and k^2.
json cmd_inspect(const RunConfig& cfg);

/// Profile on cfg.grid, or on the family's default window when no grid is given.
PotentialProfile cmd_build(const RunConfig& cfg);

/// Serialized profile in cfg.format.
std::string render_profile(const RunConfig& cfg, const PotentialProfile& prof);

json cmd_verify(const RunConfig& cfg);

/// Printed closed form and coefficient table for the family, with verdicts.
json cmd_cases(const RunConfig& cfg);

/// Parses args (without the program name), runs the command and returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace heunpot::app
