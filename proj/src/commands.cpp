#include "eqarea/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <ostream>
#include <string>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "eqarea/characteristics.hpp"
#include "eqarea/errors.hpp"
#include "eqarea/godunov.hpp"
#include "eqarea/shock_path.hpp"
#include "eqarea/solver.hpp"
#include "eqarea/validation.hpp"

namespace eqarea {

namespace {

namespace fs = std::filesystem;

std::string num(double v) { return fmt::format("{:.17g}", v); }

class OutputFile {
 public:
  OutputFile(const fs::path& dir, const std::string& name) : path_(dir / name), out_(path_) {
    if (!out_) throw NumericalError(fmt::format("cannot write {}", path_.string()));
  }
  template <class... Args>
  void line(fmt::format_string<Args...> f, Args&&... args) {
    out_ << fmt::format(f, std::forward<Args>(args)...) << '\n';
  }
  void row(std::initializer_list<double> values) {
    std::string s;
    for (double v : values) {
      if (!s.empty()) s += ',';
      s += num(v);
    }
    out_ << s << '\n';
  }
  ~OutputFile() { out_.flush(); }

 private:
  fs::path path_;
  std::ofstream out_;
};

/// Ordered key = value report.
class Report {
 public:
  void add(std::string key, std::string value) { items_.emplace_back(std::move(key), std::move(value)); }
  void add(std::string key, double value) { add(std::move(key), num(value)); }
  void add(std::string key, std::size_t value) { add(std::move(key), std::to_string(value)); }
  void add(std::string key, bool value) { add(std::move(key), std::string(value ? "true" : "false")); }
  void write(const fs::path& dir) const {
    OutputFile f(dir, "report.txt");
    for (const auto& [k, v] : items_) f.line("{} = {}", k, v);
  }

 private:
  std::vector<std::pair<std::string, std::string>> items_;
};

double median(std::vector<int> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

void describe_problem(Report& r, const RunConfig& c, const Flux& flux,
                      const PiecewiseProfile& profile) {
  r.add("flux", flux.name());
  r.add("flux.convexity", std::string(to_string(flux.convexity())));
  r.add("profile", profile.name());
  r.add("n_points", c.solver.n_points);
  r.add("jump_subpoints", c.solver.jump_subpoints);
  r.add("root_tol", c.solver.root_tol);
  r.add("area_tol", c.solver.area_tol);
}

void describe_solution(Report& r, const SolutionCurve& s) {
  r.add("t", s.t);
  r.add("initial_area", s.initial_area);
  r.add("area_drift", s.area_drift);
  r.add("polygon_area_drift", s.polygon_area_drift);
  r.add("area_ok", s.area_ok());
  r.add("epsilon_estimate", s.epsilon_estimate);
  r.add("x_extrema", s.x_extrema);
  r.add("cuts_performed", s.cuts_performed);
  r.add("secant_iterations", fmt::format("{}", fmt::join(s.secant_iterations, ",")));
  r.add("secant_iterations_median", median(s.secant_iterations));
  r.add("shock_count", s.shocks.size());
  for (std::size_t i = 0; i < s.shocks.size(); ++i) {
    const Shock& k = s.shocks[i];
    const std::string p = fmt::format("shock.{}.", i);
    r.add(p + "x", k.x);
    r.add(p + "u_minus", k.u_minus);
    r.add(p + "u_plus", k.u_plus);
    r.add(p + "rh_speed", k.rh_speed);
    r.add(p + "secant_iters", static_cast<std::size_t>(k.secant_iters));
    const double height = std::abs(k.u_minus - k.u_plus);
    if (height > 1e-12) {
      r.add(p + "displacement_estimate",
            shock_displacement_estimate(s.epsilon_estimate, k.s_curve_length, height));
    }
  }
}

void write_solution(const fs::path& dir, const SolutionCurve& s) {
  OutputFile sol(dir, "solution.csv");
  sol.line("x,u");
  for (const Point& p : s.curve) sol.row({p.x, p.y});
  OutputFile shocks(dir, "shocks.csv");
  shocks.line("x,u_minus,u_plus,rh_speed,secant_iters");
  for (const Shock& k : s.shocks) {
    shocks.line("{},{},{},{},{}", num(k.x), num(k.u_minus), num(k.u_plus), num(k.rh_speed),
                k.secant_iters);
  }
}

int cmd_solve(const RunConfig& c, const fs::path& dir) {
  const Flux flux = c.make_flux();
  const PiecewiseProfile profile = c.make_profile();
  const SolutionCurve s = solve_at_time(flux, profile, c.t, c.solver);
  write_solution(dir, s);
  Report r;
  r.add("command", std::string("solve"));
  describe_problem(r, c, flux, profile);
  describe_solution(r, s);
  r.write(dir);
  return kExitOk;
}

int cmd_slice(const RunConfig& c, const fs::path& dir) {
  const Flux flux = c.make_flux();
  const PiecewiseProfile profile = c.make_profile();
  const SampledCurve g0 = sample_gamma0(profile, c.solver.n_points, c.solver.jump_subpoints);
  const ShearedCurve g = shear_polyline_serial(flux, g0, c.t);
  OutputFile f(dir, "slice.csv");
  f.line("xi,x,y");
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    f.row({g.source_params[i], g.vertices[i].x, g.vertices[i].y});
  }
  Report r;
  r.add("command", std::string("slice"));
  describe_problem(r, c, flux, profile);
  r.add("t", c.t);
  r.add("vertices", g.vertices.size());
  r.add("x_extrema", count_x_extrema(g));
  r.add("epsilon_estimate", epsilon_estimate(g));
  r.write(dir);
  return kExitOk;
}

int cmd_godunov(const RunConfig& c, const fs::path& dir) {
  const Flux flux = c.make_flux();
  const PiecewiseProfile profile = c.make_profile();
  GodunovStats stats;
  const Grid1D g = godunov_solve(flux, profile, c.t, c.cells, c.cfl, &stats);
  OutputFile f(dir, "godunov.csv");
  f.line("x_center,u_avg");
  for (std::size_t i = 0; i < g.n_cells; ++i) f.row({g.center(i), g.averages[i]});
  Report r;
  r.add("command", std::string("godunov"));
  r.add("flux", flux.name());
  r.add("profile", profile.name());
  r.add("t", c.t);
  r.add("cells", c.cells);
  r.add("cfl", c.cfl);
  r.add("dx", g.dx);
  r.add("steps", stats.steps);
  r.add("initial_mass", stats.mass.empty() ? g.total() : stats.mass.front());
  r.add("final_mass", g.total());
  r.add("exact_mass", initial_area(profile));
  if (!stats.total_variation.empty()) {
    r.add("initial_total_variation", stats.total_variation.front());
    r.add("final_total_variation", stats.total_variation.back());
  }
  r.write(dir);
  return kExitOk;
}

int cmd_validate(const RunConfig& c, const fs::path& dir, std::ostream& err) {
  const Flux flux = c.make_flux();
  const PiecewiseProfile profile = c.make_profile();
  const SolutionCurve s = solve_at_time(flux, profile, c.t, c.solver);
  ValidationReport v = validate(flux, profile, s, c.dt);
  if (c.reference) {
    const Grid1D g = godunov_solve(flux, profile, c.t, c.cells, c.cfl);
    v.l1_vs_reference = l1_distance(sampled(s), sampled(g));
  }
  write_solution(dir, s);

  Report r;
  r.add("command", std::string("validate"));
  describe_problem(r, c, flux, profile);
  describe_solution(r, s);
  r.add("conservation_residual", v.conservation_residual);
  r.add("conservation_tolerance", v.conservation_tolerance);
  r.add("rh_tolerance", c.rh_tol);
  r.add("rh_residual_max", v.max_rh_residual());
  for (std::size_t i = 0; i < v.rh_residuals.size(); ++i) {
    const RhResidual& k = v.rh_residuals[i];
    const std::string p = fmt::format("rh.{}.", i);
    r.add(p + "x", k.x);
    r.add(p + "fd_speed", k.fd_speed);
    r.add(p + "rh_speed", k.rh_speed);
    r.add(p + "residual", k.residual);
  }
  r.add("entropy_ok", v.entropy_ok);
  if (v.l1_vs_reference) {
    r.add("reference_cells", c.cells);
    r.add("l1_vs_reference", *v.l1_vs_reference);
  }
  const bool conservation_ok = v.conservation_residual <= v.conservation_tolerance;
  const bool rh_ok = v.max_rh_residual() <= c.rh_tol;
  const bool passed = conservation_ok && rh_ok && v.entropy_ok;
  r.add("passed", passed);
  r.write(dir);
  if (!passed) {
    err << fmt::format("validation failed: conservation {} (tol {}), rh {} (tol {}), entropy {}\n",
                       num(v.conservation_residual), num(v.conservation_tolerance),
                       num(v.max_rh_residual()), num(c.rh_tol), v.entropy_ok ? "ok" : "violated");
    return kExitNumerical;
  }
  return kExitOk;
}

int cmd_sweep(const RunConfig& c, const fs::path& dir) {
  const Flux flux = c.make_flux();
  const PiecewiseProfile profile = c.make_profile();
  const ShockPathSet set = sweep(flux, profile, c.t_start, c.t_end, c.n_times, c.solver, c.jobs);
  for (std::size_t k = 0; k < set.paths.size(); ++k) {
    OutputFile f(dir, fmt::format("path_{}.csv", k));
    f.line("x,t");
    for (const Point& p : set.paths[k]) f.row({p.x, p.y});
  }
  {
    OutputFile f(dir, "merges.csv");
    f.line("t_before,t_after,continuing_path,ended_paths");
    for (const MergeEvent& m : set.merge_events) {
      std::vector<std::size_t> ended(m.paths.begin() + 1, m.paths.end());
      f.line("{},{},{},{}", num(m.t_before), num(m.t_after), m.paths.front(),
             fmt::join(ended, ";"));
    }
  }
  {
    OutputFile f(dir, "shock_counts.csv");
    f.line("t,count");
    for (std::size_t i = 0; i < set.times.size(); ++i) {
      f.line("{},{}", num(set.times[i]), set.shock_counts[i]);
    }
  }
  Report r;
  r.add("command", std::string("sweep"));
  describe_problem(r, c, flux, profile);
  r.add("t_start", c.t_start);
  r.add("t_end", c.t_end);
  r.add("n_times", c.n_times);
  r.add("jobs", c.jobs);
  r.add("paths", set.paths.size());
  r.add("merge_events", set.merge_events.size());
  r.add("max_shock_count", *std::max_element(set.shock_counts.begin(), set.shock_counts.end()));
  r.write(dir);
  return kExitOk;
}

int cmd_convergence(const RunConfig& c, const fs::path& dir) {
  const Flux flux = c.make_flux();
  const PiecewiseProfile profile = c.make_profile();
  const bool closed_form = c.profile.segments.empty() && c.profile.name == "riemann_step";
  const ConvergenceTable table =
      convergence_study(flux, profile, c.t, c.ladder, c.solver, closed_form);
  OutputFile f(dir, "convergence.csv");
  f.line("n_points,shock_x,error,ratio");
  for (const ConvergenceRow& row : table.rows) {
    f.line("{},{},{},{}", row.n_points, num(row.shock_x), num(row.error),
           row.ratio ? num(*row.ratio) : std::string());
  }
  Report r;
  r.add("command", std::string("convergence"));
  describe_problem(r, c, flux, profile);
  r.add("t", c.t);
  r.add("reference", std::string(table.exact_reference ? "closed_form" : "fine_solve"));
  r.add("reference_x", table.reference_x);
  for (const ConvergenceRow& row : table.rows) {
    const std::string p = fmt::format("n.{}.", row.n_points);
    r.add(p + "error", row.error);
    if (row.ratio) r.add(p + "ratio", *row.ratio);
  }
  r.write(dir);
  return kExitOk;
}

std::size_t nearest_shock(const SolutionCurve& s, double x) {
  if (s.shocks.empty()) {
    throw UnmatchedShockError(fmt::format("no shock at t = {} with n_points = {}", s.t,
                                          s.params.n_points));
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < s.shocks.size(); ++i) {
    if (std::abs(s.shocks[i].x - x) < std::abs(s.shocks[best].x - x)) best = i;
  }
  return best;
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  for (Command c : {Command::kSolve, Command::kSlice, Command::kGodunov, Command::kValidate,
                    Command::kSweep, Command::kConvergence}) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

std::string_view to_string(Command c) {
  switch (c) {
    case Command::kSolve: return "solve";
    case Command::kSlice: return "slice";
    case Command::kGodunov: return "godunov";
    case Command::kValidate: return "validate";
    case Command::kSweep: return "sweep";
    case Command::kConvergence: return "convergence";
  }
  return "?";
}

ConvergenceTable convergence_study(const Flux& flux, const PiecewiseProfile& profile, double t,
                                   const std::vector<std::size_t>& ladder,
                                   const SolveParams& params, bool riemann_closed_form) {
  if (ladder.empty()) throw ConfigError("convergence ladder is empty");
  ConvergenceTable table;
  auto at = [&](std::size_t n) {
    SolveParams p = params;
    p.n_points = n;
    return solve_at_time(flux, profile, t, p);
  };
  if (riemann_closed_form) {
    table.exact_reference = true;
    table.reference_x = rankine_hugoniot_speed(flux, profile(-0.5), profile(0.5)) * t;
  } else {
    const SolutionCurve fine = at(4 * ladder.back());
    if (fine.shocks.empty()) {
      throw UnmatchedShockError(fmt::format("reference solve at t = {} has no shock", t));
    }
    const auto tallest = std::max_element(
        fine.shocks.begin(), fine.shocks.end(), [](const Shock& a, const Shock& b) {
          return std::abs(a.u_minus - a.u_plus) < std::abs(b.u_minus - b.u_plus);
        });
    table.reference_x = tallest->x;
  }
  for (std::size_t n : ladder) {
    const SolutionCurve s = at(n);
    ConvergenceRow row;
    row.n_points = n;
    row.shock_x = s.shocks[nearest_shock(s, table.reference_x)].x;
    row.error = std::abs(row.shock_x - table.reference_x);
    if (!table.rows.empty() && row.error > 0.0) row.ratio = table.rows.back().error / row.error;
    table.rows.push_back(row);
  }
  return table;
}

int run(const RunConfig& config, Command command, std::ostream& err) {
  try {
    const fs::path dir(config.out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
      throw ConfigError(fmt::format("cannot create output directory '{}': {}", config.out_dir,
                                    ec.message()));
    }
    switch (command) {
      case Command::kSolve: return cmd_solve(config, dir);
      case Command::kSlice: return cmd_slice(config, dir);
      case Command::kGodunov: return cmd_godunov(config, dir);
      case Command::kValidate: return cmd_validate(config, dir, err);
      case Command::kSweep: return cmd_sweep(config, dir);
      case Command::kConvergence: return cmd_convergence(config, dir);
    }
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitConfig;
}

}  // namespace eqarea
