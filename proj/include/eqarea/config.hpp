#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eqarea/flux.hpp"
#include "eqarea/profile.hpp"
#include "eqarea/solver.hpp"

namespace eqarea {

/// Raw `key = value` settings, each remembering where it was set
/// ("run.cfg:12" or "--t") so later validation errors can point at it.
class KeyValueConfig {
 public:
  struct Entry {
    std::string value;
    std::string origin;
  };

  /// Parses flat key-value text.  Blank lines and `#` comments are skipped.
  static KeyValueConfig parse(std::string_view text, std::string_view source_name);
  static KeyValueConfig load(const std::string& path);

  /// Later settings win.
  void set(std::string key, std::string value, std::string origin);
  void merge(const KeyValueConfig& other);

  const Entry* find(std::string_view key) const;
  const std::map<std::string, Entry, std::less<>>& entries() const { return entries_; }

 private:
  std::map<std::string, Entry, std::less<>> entries_;
};

/// Every recognised key.
const std::vector<std::string_view>& known_config_keys();

struct FluxSpec {
  std::string name = "burgers";
  StateRange range;
  std::string expr;
  std::string deriv_expr;
  std::string second_deriv_expr;
  Convexity convexity = Convexity::kStrictlyConvex;
};

struct ProfileSpec {
  std::string name = "gaussian_triple";
  std::vector<SegmentSpec> segments;  ///< non-empty overrides name
  ProfileParams params;
};

struct RunConfig {
  FluxSpec flux;
  ProfileSpec profile;
  SolveParams solver;

  double t = 4.25;
  std::size_t cells = 4000;
  double cfl = 0.9;
  double t_start = 0.0;
  double t_end = 10.0;
  std::size_t n_times = 101;
  std::size_t jobs = 1;
  double dt = 0.0;                 ///< validate: 0 means 1e-3 * t
  double rh_tol = 1e-2;            ///< validate: max |fd - RH| speed
  bool reference = false;          ///< validate: also compare with Godunov
  std::vector<std::size_t> ladder{250, 500, 1000, 2000};
  std::string out_dir = ".";

  /// Origin of each key that was set explicitly.
  std::map<std::string, std::string, std::less<>> origins;

  Flux make_flux() const;
  PiecewiseProfile make_profile() const;
};

/// Converts and validates settings.  Errors name the offending origin.
/// `out_dir` defaults to $EQAREA_OUT_DIR, then ".".
RunConfig build_run_config(const KeyValueConfig& kv);

/// "{a, b, expr}; {a, b, expr}"
std::vector<SegmentSpec> parse_segments(std::string_view text);

}  // namespace eqarea
