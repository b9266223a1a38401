#include "eqarea/config.hpp"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "eqarea/errors.hpp"

namespace eqarea {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

double to_double(std::string_view text) {
  const std::string s(trim(text));
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v)) {
    throw ConfigError(fmt::format("'{}' is not a finite number", s));
  }
  return v;
}

std::size_t to_size(std::string_view text) {
  const auto s = trim(text);
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ConfigError(fmt::format("'{}' is not a non-negative integer", s));
  }
  return v;
}

bool to_bool(std::string_view text) {
  const auto s = trim(text);
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw ConfigError(fmt::format("'{}' is not a boolean", s));
}

StateRange to_range(std::string_view text) {
  auto s = trim(text);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
    throw ConfigError(fmt::format("range must look like [lo, hi], got '{}'", s));
  }
  const auto parts = split(s.substr(1, s.size() - 2), ',');
  if (parts.size() != 2) throw ConfigError(fmt::format("range needs two bounds, got '{}'", s));
  StateRange r{to_double(parts[0]), to_double(parts[1])};
  if (!(r.lo < r.hi)) throw ConfigError(fmt::format("range [{}, {}] is empty", r.lo, r.hi));
  return r;
}

Convexity to_convexity(std::string_view text) {
  const auto s = trim(text);
  if (s == "convex") return Convexity::kStrictlyConvex;
  if (s == "concave") return Convexity::kStrictlyConcave;
  throw ConfigError(fmt::format("convexity must be 'convex' or 'concave', got '{}'", s));
}

std::vector<std::size_t> to_ladder(std::string_view text) {
  std::vector<std::size_t> out;
  for (auto part : split(text, ',')) out.push_back(to_size(part));
  if (out.size() < 2) throw ConfigError("ladder needs at least two sizes");
  if (!std::is_sorted(out.begin(), out.end()) ||
      std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw ConfigError("ladder sizes must be strictly increasing");
  }
  return out;
}

double positive(double v, std::string_view what) {
  if (!(v > 0.0)) throw ConfigError(fmt::format("{} must be > 0, got {}", what, v));
  return v;
}

}  // namespace

KeyValueConfig KeyValueConfig::parse(std::string_view text, std::string_view source_name) {
  KeyValueConfig cfg;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find('\n', start), text.size());
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const std::string origin = fmt::format("{}:{}", source_name, line_no);
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(fmt::format("{}: expected 'key = value', got '{}'", origin, line));
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError(fmt::format("{}: missing key", origin));
    const auto& known = known_config_keys();
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw ConfigError(fmt::format("{}: unknown key '{}'", origin, key));
    }
    if (cfg.find(key)) throw ConfigError(fmt::format("{}: duplicate key '{}'", origin, key));
    cfg.set(std::string(key), std::string(value), origin);
  }
  return cfg;
}

KeyValueConfig KeyValueConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(fmt::format("{}: cannot open config file", path));
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

void KeyValueConfig::set(std::string key, std::string value, std::string origin) {
  entries_[std::move(key)] = {std::move(value), std::move(origin)};
}

void KeyValueConfig::merge(const KeyValueConfig& other) {
  for (const auto& [k, e] : other.entries_) set(k, e.value, e.origin);
}

const KeyValueConfig::Entry* KeyValueConfig::find(std::string_view key) const {
  const auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second;
}

const std::vector<std::string_view>& known_config_keys() {
  static const std::vector<std::string_view> keys{
      "flux.name",          "flux.range",        "flux.expr",
      "flux.deriv_expr",    "flux.second_deriv_expr", "flux.convexity",
      "profile.name",       "profile.segments",  "profile.u_left",
      "profile.u_right",    "profile.n_points",  "profile.jump_subpoints",
      "solver.root_tol",    "solver.area_tol",   "run.t",
      "run.cells",          "run.cfl",           "run.t_start",
      "run.t_end",          "run.n_times",       "run.jobs",
      "run.dt",             "run.rh_tol",        "run.reference",
      "run.ladder",         "run.out_dir",
  };
  return keys;
}

std::vector<SegmentSpec> parse_segments(std::string_view text) {
  std::vector<SegmentSpec> out;
  for (auto item : split(text, ';')) {
    if (item.empty()) continue;
    if (item.size() < 2 || item.front() != '{' || item.back() != '}') {
      throw ConfigError(fmt::format("segment must look like {{a, b, expr}}, got '{}'", item));
    }
    const auto body = item.substr(1, item.size() - 2);
    const auto c1 = body.find(',');
    const auto c2 = c1 == std::string_view::npos ? c1 : body.find(',', c1 + 1);
    if (c2 == std::string_view::npos) {
      throw ConfigError(fmt::format("segment needs a, b and an expression, got '{}'", item));
    }
    SegmentSpec s{to_double(body.substr(0, c1)), to_double(body.substr(c1 + 1, c2 - c1 - 1)),
                  std::string(trim(body.substr(c2 + 1)))};
    if (s.expr.empty()) throw ConfigError(fmt::format("segment '{}' has no expression", item));
    out.push_back(std::move(s));
  }
  if (out.empty()) throw ConfigError("profile.segments is empty");
  return out;
}

RunConfig build_run_config(const KeyValueConfig& kv) {
  RunConfig c;
  if (const char* env = std::getenv("EQAREA_OUT_DIR"); env && *env) c.out_dir = env;

  for (const auto& [key, entry] : kv.entries()) {
    const auto& v = entry.value;
    try {
      if (key == "flux.name") c.flux.name = v;
      else if (key == "flux.range") c.flux.range = to_range(v);
      else if (key == "flux.expr") c.flux.expr = v;
      else if (key == "flux.deriv_expr") c.flux.deriv_expr = v;
      else if (key == "flux.second_deriv_expr") c.flux.second_deriv_expr = v;
      else if (key == "flux.convexity") c.flux.convexity = to_convexity(v);
      else if (key == "profile.name") c.profile.name = v;
      else if (key == "profile.segments") c.profile.segments = parse_segments(v);
      else if (key == "profile.u_left") c.profile.params.u_left = to_double(v);
      else if (key == "profile.u_right") c.profile.params.u_right = to_double(v);
      else if (key == "profile.n_points") c.solver.n_points = to_size(v);
      else if (key == "profile.jump_subpoints") c.solver.jump_subpoints = to_size(v);
      else if (key == "solver.root_tol") c.solver.root_tol = positive(to_double(v), key);
      else if (key == "solver.area_tol") c.solver.area_tol = positive(to_double(v), key);
      else if (key == "run.t") c.t = to_double(v);
      else if (key == "run.cells") c.cells = to_size(v);
      else if (key == "run.cfl") c.cfl = to_double(v);
      else if (key == "run.t_start") c.t_start = to_double(v);
      else if (key == "run.t_end") c.t_end = to_double(v);
      else if (key == "run.n_times") c.n_times = to_size(v);
      else if (key == "run.jobs") c.jobs = to_size(v);
      else if (key == "run.dt") c.dt = to_double(v);
      else if (key == "run.rh_tol") c.rh_tol = positive(to_double(v), key);
      else if (key == "run.reference") c.reference = to_bool(v);
      else if (key == "run.ladder") c.ladder = to_ladder(v);
      else if (key == "run.out_dir") c.out_dir = v;
      else throw ConfigError(fmt::format("unknown key '{}'", key));
    } catch (const ConfigError& e) {
      throw ConfigError(fmt::format("{}: {}: {}", entry.origin, key, e.what()));
    }
    c.origins[key] = entry.origin;
  }

  auto origin_of = [&](std::string_view key) {
    const auto it = c.origins.find(key);
    return it == c.origins.end() ? std::string("default") : it->second;
  };
  auto check = [&](bool ok, std::string_view key, const std::string& message) {
    if (!ok) throw ConfigError(fmt::format("{}: {}: {}", origin_of(key), key, message));
  };
  check(c.solver.n_points >= 16, "profile.n_points", "must be >= 16");
  check(c.solver.jump_subpoints >= 2, "profile.jump_subpoints", "must be >= 2");
  check(c.t >= 0.0, "run.t", "must be >= 0");
  check(c.cells >= 1, "run.cells", "must be >= 1");
  check(c.cfl > 0.0 && c.cfl <= 0.9, "run.cfl", "must be in (0, 0.9]");
  check(c.n_times >= 2, "run.n_times", "must be >= 2");
  check(c.jobs >= 1, "run.jobs", "must be >= 1");
  check(c.dt >= 0.0, "run.dt", "must be >= 0");
  check(c.t_start >= 0.0 && c.t_end > c.t_start, "run.t_end", "needs 0 <= t_start < t_end");
  check(c.ladder.front() >= 16, "run.ladder", "sizes must be >= 16");

  // Resolve names now so an unknown one is reported against its key.
  try {
    (void)c.make_flux();
  } catch (const ConfigError& e) {
    const bool custom = !c.flux.expr.empty();
    throw ConfigError(fmt::format("{}: {}", origin_of(custom ? "flux.expr" : "flux.name"),
                                  e.what()));
  }
  try {
    (void)c.make_profile();
  } catch (const ConfigError& e) {
    const bool custom = !c.profile.segments.empty();
    throw ConfigError(fmt::format(
        "{}: {}", origin_of(custom ? "profile.segments" : "profile.name"), e.what()));
  }
  return c;
}

Flux RunConfig::make_flux() const {
  if (flux.expr.empty()) {
    if (!flux.deriv_expr.empty() || !flux.second_deriv_expr.empty()) {
      throw ConfigError("flux.deriv_expr and flux.second_deriv_expr need flux.expr");
    }
    return builtin_flux(flux.name, flux.range);
  }
  if (flux.deriv_expr.empty() || flux.second_deriv_expr.empty()) {
    throw ConfigError("a custom flux needs flux.expr, flux.deriv_expr and flux.second_deriv_expr");
  }
  return expression_flux(flux.expr, flux.deriv_expr, flux.second_deriv_expr, flux.convexity,
                         flux.range);
}

PiecewiseProfile RunConfig::make_profile() const {
  if (!profile.segments.empty()) return expression_profile(profile.segments);
  return builtin_profile(profile.name, profile.params);
}

}  // namespace eqarea
