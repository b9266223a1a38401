#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "eqarea/config.hpp"

namespace eqarea {

enum class Command { kSolve, kSlice, kGodunov, kValidate, kSweep, kConvergence };

std::optional<Command> parse_command(std::string_view name);
std::string_view to_string(Command c);

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitNumerical = 2;

/// Runs a command and writes its files into config.out_dir.  Errors are
/// printed to `err`; the return value is the process exit status.
int run(const RunConfig& config, Command command, std::ostream& err);

struct ConvergenceRow {
  std::size_t n_points = 0;
  double shock_x = 0.0;
  double error = 0.0;
  std::optional<double> ratio;  ///< previous error / this error
};

struct ConvergenceTable {
  double reference_x = 0.0;
  bool exact_reference = false;  ///< closed form instead of a fine solve
  std::vector<ConvergenceRow> rows;
};

/// Shock-position errors over a refinement ladder.  For the built-in
/// riemann_step profile the reference is the closed-form position of the
/// shock born at x = 0; otherwise it is a solve at 4x the finest size.
ConvergenceTable convergence_study(const Flux& flux, const PiecewiseProfile& profile, double t,
                                   const std::vector<std::size_t>& ladder,
                                   const SolveParams& params, bool riemann_closed_form);

}  // namespace eqarea
