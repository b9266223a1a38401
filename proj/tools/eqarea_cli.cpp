// eqarea: batch front-end for the equal-area solver.

#include <iostream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "eqarea/commands.hpp"
#include "eqarea/config.hpp"
#include "eqarea/errors.hpp"

namespace {

struct Flag {
  std::string name;  // as typed, e.g. "--t"
  std::string key;   // config key it sets
  std::string help;
};

const std::vector<Flag>& command_flags() {
  static const std::vector<Flag> flags{
      {"--t", "run.t", "solution time"},
      {"--n-points", "profile.n_points", "initial-curve sample count"},
      {"--root-tol", "solver.root_tol", "secant tolerance"},
      {"--out", "run.out_dir", "output directory (default $EQAREA_OUT_DIR or .)"},
      {"--cells", "run.cells", "Godunov cell count"},
      {"--cfl", "run.cfl", "Godunov CFL number"},
      {"--t-start", "run.t_start", "sweep start time"},
      {"--t-end", "run.t_end", "sweep end time"},
      {"--n-times", "run.n_times", "sweep slice count"},
      {"--jobs", "run.jobs", "sweep worker count"},
      {"--dt", "run.dt", "validate: finite-difference time step"},
      {"--rh-tol", "run.rh_tol", "validate: RH residual tolerance"},
      {"--reference", "run.reference", "validate: compare with Godunov (true/false)"},
      {"--ladder", "run.ladder", "convergence: comma-separated n_points"},
  };
  return flags;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equal-area solver for scalar conservation laws"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "flat key = value config file");

  // Ordered so that later flags override earlier ones deterministically.
  std::map<std::string, std::string> values;
  std::map<std::string, std::string> origins;
  for (const auto& key : eqarea::known_config_keys()) {
    const std::string flag = "--" + std::string(key);
    app.add_option_function<std::string>(
        flag,
        [&values, &origins, flag, k = std::string(key)](const std::string& v) {
          values[k] = v;
          origins[k] = flag;
        },
        "override " + std::string(key));
  }
  for (const Flag& f : command_flags()) {
    app.add_option_function<std::string>(
        f.name,
        [&values, &origins, f](const std::string& v) {
          values[f.key] = v;
          origins[f.key] = f.name;
        },
        f.help);
  }

  for (auto name : {"solve", "slice", "godunov", "validate", "sweep", "convergence"}) {
    app.add_subcommand(name, std::string(name) + " command");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? eqarea::kExitOk : eqarea::kExitConfig;
  }

  const auto command = eqarea::parse_command(app.get_subcommands().front()->get_name());
  try {
    eqarea::KeyValueConfig kv;
    if (!config_path.empty()) kv = eqarea::KeyValueConfig::load(config_path);
    for (const auto& [k, v] : values) kv.set(k, v, origins[k]);
    const eqarea::RunConfig config = eqarea::build_run_config(kv);
    return eqarea::run(config, *command, std::cerr);
  } catch (const eqarea::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return eqarea::kExitConfig;
  }
}
