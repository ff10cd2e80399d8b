// Copyright 2026 The rydkerr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Run configuration for the command-line harness.
//
// A config file is flat `key = value` text; `#` starts a comment. Keys are the
// long flag names without dashes (`delta`, `n-atoms`, `t-final`, ...), and
// underscores are accepted in place of dashes. Flags given on the command
// line override keys from the file.

#ifndef RYDKERR_CLI_CONFIG_HPP
#define RYDKERR_CLI_CONFIG_HPP

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "rydkerr/error.hpp"
#include "rydkerr/model.hpp"

namespace rydkerr::cli {

/// Bad flags, bad config, unknown names: exit code 1.
class UsageError : public Error {
 public:
  using Error::Error;
};

enum class Command { kEvolve, kSteady, kSpin, kClassical, kLinearized, kAnalytic, kWigner, kSweep, kCompare, kFigure };

inline constexpr std::array<std::pair<const char*, Command>, 10> kCommandNames{{
    {"evolve", Command::kEvolve},
    {"steady", Command::kSteady},
    {"spin", Command::kSpin},
    {"classical", Command::kClassical},
    {"linearized", Command::kLinearized},
    {"analytic", Command::kAnalytic},
    {"wigner", Command::kWigner},
    {"sweep", Command::kSweep},
    {"compare", Command::kCompare},
    {"figure", Command::kFigure},
}};

inline Command parse_command(const std::string& s) {
  for (const auto& [name, cmd] : kCommandNames)
    if (s == name) return cmd;
  throw UsageError("unknown command '" + s + "'");
}

enum class Axis { kDelta, kLambda };

struct SweepSpec {
  Axis axis = Axis::kDelta;
  double start = 0.0;
  double stop = 0.0;
  int count = 0;

  double value(int i) const { return count == 1 ? start : start + (stop - start) * double(i) / double(count - 1); }
};

struct RunConfig {
  Command command = Command::kSteady;
  ModelParams params{};
  std::optional<int> dim;  ///< fixed Fock truncation; adaptive when empty
  double t_final = 10.0;
  int samples = 201;
  std::optional<SweepSpec> grid;
  std::string output_path;  ///< file (or directory for `figure`); stdout when empty
  bool emit_plot = false;
  double tol = 1e-9;
  std::string figure;
};

using KeyValues = std::map<std::string, std::string>;

inline std::string normalize_key(std::string k) {
  std::replace(k.begin(), k.end(), '_', '-');
  while (!k.empty() && k.front() == '-') k.erase(k.begin());
  return k;
}

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline KeyValues parse_config_text(std::istream& in) {
  KeyValues out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw UsageError("config line " + std::to_string(lineno) + ": expected key = value");
    out[normalize_key(trim(line.substr(0, eq)))] = trim(line.substr(eq + 1));
  }
  return out;
}

inline KeyValues read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  return parse_config_text(in);
}

namespace detail {

inline double to_double(const std::string& key, const std::string& v) {
  double out = 0.0;
  const auto* end = v.data() + v.size();
  auto [ptr, ec] = std::from_chars(v.data(), end, out);
  if (ec != std::errc() || ptr != end) throw UsageError("--" + key + ": not a number: '" + v + "'");
  return out;
}

inline int to_int(const std::string& key, const std::string& v) {
  int out = 0;
  const auto* end = v.data() + v.size();
  auto [ptr, ec] = std::from_chars(v.data(), end, out);
  if (ec != std::errc() || ptr != end) throw UsageError("--" + key + ": not an integer: '" + v + "'");
  return out;
}

inline bool to_bool(const std::string& key, const std::string& v) {
  if (v.empty() || v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  throw UsageError("--" + key + ": not a boolean: '" + v + "'");
}

}  // namespace detail

/// Builds a validated RunConfig. `file` holds config-file keys, `flags` the
/// command-line values; flags win.
inline RunConfig make_config(const std::string& command, const KeyValues& file, const KeyValues& flags) {
  KeyValues kv = file;
  for (const auto& [k, v] : flags) kv[normalize_key(k)] = v;

  RunConfig cfg;
  std::string cmd = command;
  if (cmd.empty()) {
    auto it = kv.find("command");
    if (it == kv.end()) throw UsageError("no command given");
    cmd = it->second;
  }
  cfg.command = parse_command(cmd);

  static const std::array<const char*, 18> known{"command", "delta", "lambda", "chi", "gamma", "n-atoms",
                                                 "dim", "t-final", "axis", "start", "stop", "count",
                                                 "out", "plot", "tol", "samples", "config", "figure"};
  for (const auto& [k, v] : kv)
    if (std::find_if(known.begin(), known.end(), [&](const char* n) { return k == n; }) == known.end())
      throw UsageError("unknown key '" + k + "'");

  auto get = [&](const char* k) -> std::optional<std::string> {
    auto it = kv.find(k);
    if (it == kv.end()) return std::nullopt;
    return it->second;
  };
  if (auto v = get("delta")) cfg.params.delta = detail::to_double("delta", *v);
  if (auto v = get("lambda")) cfg.params.lambda = detail::to_double("lambda", *v);
  if (auto v = get("chi")) cfg.params.chi = detail::to_double("chi", *v);
  if (auto v = get("gamma")) cfg.params.gamma = detail::to_double("gamma", *v);
  if (auto v = get("n-atoms")) cfg.params.n_atoms = detail::to_int("n-atoms", *v);
  if (auto v = get("dim")) cfg.dim = detail::to_int("dim", *v);
  if (auto v = get("t-final")) cfg.t_final = detail::to_double("t-final", *v);
  if (auto v = get("samples")) cfg.samples = detail::to_int("samples", *v);
  if (auto v = get("out")) cfg.output_path = *v;
  if (auto v = get("plot")) cfg.emit_plot = detail::to_bool("plot", *v);
  if (auto v = get("tol")) cfg.tol = detail::to_double("tol", *v);
  if (auto v = get("figure")) cfg.figure = *v;

  const bool any_grid = get("axis") || get("start") || get("stop") || get("count");
  if (any_grid) {
    SweepSpec g;
    const std::string axis = get("axis").value_or("delta");
    if (axis == "delta")
      g.axis = Axis::kDelta;
    else if (axis == "lambda")
      g.axis = Axis::kLambda;
    else
      throw UsageError("--axis must be delta or lambda");
    if (!get("start") || !get("stop") || !get("count")) throw UsageError("a sweep needs --start, --stop and --count");
    g.start = detail::to_double("start", *get("start"));
    g.stop = detail::to_double("stop", *get("stop"));
    g.count = detail::to_int("count", *get("count"));
    if (g.count < 2) throw UsageError("--count must be >= 2");
    if (!(g.stop > g.start)) throw UsageError("--stop must exceed --start");
    cfg.grid = g;
  }
  if (cfg.command == Command::kSweep && !cfg.grid) throw UsageError("sweep needs --start, --stop and --count");
  if (cfg.command == Command::kFigure && cfg.figure.empty()) throw UsageError("figure needs a name");

  if (!(cfg.params.gamma > 0.0)) throw UsageError("--gamma must be > 0");
  if (cfg.params.lambda < 0.0) throw UsageError("--lambda must be >= 0");
  if (cfg.params.n_atoms < 1) throw UsageError("--n-atoms must be >= 1");
  if (cfg.dim && *cfg.dim < 2) throw UsageError("--dim must be >= 2");
  if (!(cfg.t_final > 0.0)) throw UsageError("--t-final must be > 0");
  if (cfg.samples < 2) throw UsageError("--samples must be >= 2");
  if (!(cfg.tol > 0.0)) throw UsageError("--tol must be > 0");
  return cfg;
}

}  // namespace rydkerr::cli

#endif  // RYDKERR_CLI_CONFIG_HPP
