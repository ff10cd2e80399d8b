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


// rydkerr: command-line front end.
//
//   rydkerr <command> [flags]        command: evolve steady spin classical
//                                    linearized analytic wigner sweep compare
//   rydkerr figure <name> [--out D]  name: fig1 fig2a fig2b fig3 figA1 figA2
//                                    figS4 figD

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "rydkerr/cli/config.hpp"
#include "rydkerr/cli/run.hpp"

namespace {

using rydkerr::cli::KeyValues;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Driven-dissipative Rydberg ensemble in the bosonized Kerr approximation"};
  app.set_help_flag("-h,--help", "print this help and exit");

  std::string command, figure_name;
  app.add_option("command", command, "evolve | steady | spin | classical | linearized | analytic | wigner | sweep | "
                                     "compare | figure");
  app.add_option("figure", figure_name, "figure name for the `figure` command");

  // Every value flag is collected as text and validated by make_config, so
  // that flags and config-file keys share one parser.
  KeyValues flags;
  const std::pair<const char*, const char*> value_flags[] = {
      {"delta", "laser detuning (units of gamma)"},
      {"lambda", "collective drive strength"},
      {"chi", "Kerr coefficient"},
      {"gamma", "decay rate (default 1)"},
      {"n-atoms", "atom number for the spin model (default 6)"},
      {"dim", "fixed Fock truncation (adaptive when omitted)"},
      {"t-final", "final time (default 10)"},
      {"axis", "sweep axis: delta | lambda"},
      {"start", "sweep start"},
      {"stop", "sweep stop"},
      {"count", "sweep point count (>= 2)"},
      {"out", "output CSV file (directory for `figure`)"},
      {"tol", "integrator tolerance (default 1e-9)"},
      {"samples", "time samples for trajectories (default 201)"},
  };
  std::map<std::string, std::string> raw;
  for (const auto& [name, help] : value_flags) app.add_option(std::string("--") + name, raw[name], help);
  bool plot = false;
  app.add_flag("--plot", plot, "also write an SVG plot");
  std::string config_path;
  app.add_option("--config", config_path, "flat key = value config file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return rydkerr::cli::kExitUsage;
  }

  for (const auto& [name, help] : value_flags)
    if (app.get_option(std::string("--") + name)->count() > 0) flags[name] = raw[name];
  if (plot) flags["plot"] = "true";
  if (!figure_name.empty()) flags["figure"] = figure_name;

  rydkerr::cli::RunConfig cfg;
  try {
    const KeyValues file = config_path.empty() ? KeyValues{} : rydkerr::cli::read_config_file(config_path);
    cfg = rydkerr::cli::make_config(command, file, flags);
  } catch (const rydkerr::cli::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return rydkerr::cli::kExitUsage;
  }
  return rydkerr::cli::run(cfg, std::cout, std::cerr);
}
