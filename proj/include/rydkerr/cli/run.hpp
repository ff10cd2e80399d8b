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

// Command dispatch for the `rydkerr` tool. Every command writes CSV (to the
// --out path, or to `out` when none is given) and a one-line summary to `log`.
// Exit codes: 0 success, 1 usage error, 2 numerical failure.

#ifndef RYDKERR_CLI_RUN_HPP
#define RYDKERR_CLI_RUN_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>

#include "rydkerr/analytic.hpp"
#include "rydkerr/bosonic.hpp"
#include "rydkerr/classical.hpp"
#include "rydkerr/cli/config.hpp"
#include "rydkerr/cli/output.hpp"
#include "rydkerr/cli/sweep.hpp"
#include "rydkerr/linearized.hpp"
#include "rydkerr/spin.hpp"
#include "rydkerr/wigner.hpp"

namespace rydkerr::cli {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitNumerical = 2 };

namespace detail {

/// Calls body(stream) on the --out file or on the fallback stream.
inline void with_output(const RunConfig& cfg, std::ostream& fallback, const std::function<void(std::ostream&)>& body) {
  if (cfg.output_path.empty()) {
    body(fallback);
    return;
  }
  auto f = open_output(cfg.output_path);
  body(f);
}

inline std::string plot_path(const RunConfig& cfg, const std::string& stem) {
  if (cfg.output_path.empty()) return stem + ".svg";
  std::filesystem::path p(cfg.output_path);
  p.replace_extension(".svg");
  return p.string();
}

inline OdeOptions ode_from(const RunConfig& cfg) { return OdeOptions{cfg.tol, cfg.tol}; }

inline void write_trajectory(std::ostream& os, const Trajectory& tr) {
  CsvWriter csv(os);
  csv.header({"t", "n_e", "q", "b_re", "b_im", "p_double"});
  for (std::size_t i = 0; i < tr.times.size(); ++i) {
    const auto& r = tr.records[i];
    csv.row({tr.times[i], r.n_e, r.mandel_q, r.b_mean.real(), r.b_mean.imag(), r.p_double});
  }
}

inline void plot_trajectories(const std::string& path, const std::string& title,
                              const std::vector<std::pair<std::string, const Trajectory*>>& trs) {
  std::vector<PlotSeries> s;
  for (const auto& [name, tr] : trs) {
    PlotSeries ne{"n_e " + name, tr->times, {}}, q{"Q " + name, tr->times, {}};
    for (const auto& r : tr->records) {
      ne.y.push_back(r.n_e);
      q.y.push_back(r.mandel_q);
    }
    s.push_back(std::move(ne));
    s.push_back(std::move(q));
  }
  write_svg_plot(path, title, "t (1/gamma)", s);
}

inline void write_sweep(std::ostream& os, const SweepResult& res) {
  CsvWriter csv(os);
  csv.header(sweep_header());
  for (const auto& r : res.rows) csv.row(sweep_fields(r));
}

inline void plot_sweep(const std::string& path, const std::string& title, const std::string& xlabel,
                       const SweepResult& res) {
  PlotSeries q{"n_e quantum", {}, {}}, lo{"n_es classical low", {}, {}}, hi{"n_es classical high", {}, {}},
      an{"n_e analytic", {}, {}}, mq{"Q quantum", {}, {}};
  for (const auto& r : res.rows) {
    for (auto* s : {&q, &lo, &hi, &an, &mq}) s->x.push_back(r.axis);
    q.y.push_back(r.quantum ? r.quantum->n_e : NAN);
    mq.y.push_back(r.quantum ? r.quantum->mandel_q : NAN);
    lo.y.push_back(r.n_e_classical_low.value_or(NAN));
    hi.y.push_back(r.n_e_classical_high.value_or(NAN));
    an.y.push_back(r.analytic ? r.analytic->n_e : NAN);
  }
  write_svg_plot(path, title, xlabel, {q, an, lo, hi, mq});
}

inline std::string sweep_summary(const SweepResult& res) {
  std::ostringstream os;
  os << "sweep: " << res.rows.size() << " points; max |n_e quantum - analytic| = "
     << format_number(res.max_n_e_deviation) << ", max |Q quantum - analytic| = "
     << format_number(res.max_q_deviation) << ", max ||b| quantum - analytic| = "
     << format_number(res.max_b_abs_deviation);
  return os.str();
}

inline std::string tag(double v) {
  std::string s = format_number(v);
  for (auto& ch : s)
    if (ch == '-') ch = 'm';
  return s;
}

}  // namespace detail

// ---- individual commands ---------------------------------------------------

inline void cmd_evolve(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  const int dim = cfg.dim.value_or(kDefaultFockDim);
  const auto tr = evolve(cfg.params, DensityMatrix::vacuum(dim), cfg.t_final, cfg.samples, {detail::ode_from(cfg)});
  detail::with_output(cfg, out, [&](std::ostream& os) { detail::write_trajectory(os, tr); });
  if (cfg.emit_plot) detail::plot_trajectories(detail::plot_path(cfg, "evolve"), "bosonic master equation", {{"", &tr}});
  double pmax = 0.0;
  for (const auto& r : tr.records) pmax = std::max(pmax, r.p_double);
  log << "evolve: final n_e = " << format_number(tr.records.back().n_e)
      << ", final Q = " << format_number(tr.records.back().mandel_q) << ", max p_double = " << format_number(pmax)
      << '\n';
}

inline void cmd_spin(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  const auto tr = evolve_spin(cfg.params, cfg.t_final, cfg.samples, {detail::ode_from(cfg)});
  detail::with_output(cfg, out, [&](std::ostream& os) { detail::write_trajectory(os, tr); });
  if (cfg.emit_plot) detail::plot_trajectories(detail::plot_path(cfg, "spin"), "exact spin model", {{"", &tr}});
  log << "spin: N = " << cfg.params.n_atoms << ", final n_e = " << format_number(tr.records.back().n_e)
      << ", final Q = " << format_number(tr.records.back().mandel_q) << '\n';
}

inline void cmd_sweep(const RunConfig& cfg, const SweepSpec& grid, std::ostream& out, std::ostream& log) {
  const auto res = run_sweep(cfg.params, grid, cfg.dim);
  detail::with_output(cfg, out, [&](std::ostream& os) { detail::write_sweep(os, res); });
  if (cfg.emit_plot)
    detail::plot_sweep(detail::plot_path(cfg, "sweep"), "steady state",
                       grid.axis == Axis::kDelta ? "Delta (gamma)" : "lambda (gamma)", res);
  log << detail::sweep_summary(res) << '\n';
}

inline void cmd_classical(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  if (cfg.grid) {
    if (cfg.grid->axis != Axis::kDelta) throw UsageError("classical hysteresis sweeps run along --axis delta");
    std::vector<double> grid(cfg.grid->count);
    for (int i = 0; i < cfg.grid->count; ++i) grid[i] = cfg.grid->value(i);
    const auto up = hysteresis_sweep(cfg.params, grid, SweepDirection::kUp);
    auto down = hysteresis_sweep(cfg.params, grid, SweepDirection::kDown);
    std::reverse(down.begin(), down.end());
    double gap = 0.0;
    detail::with_output(cfg, out, [&](std::ostream& os) {
      CsvWriter csv(os);
      csv.header({"delta", "n_es_up", "n_es_down"});
      for (std::size_t i = 0; i < grid.size(); ++i) {
        csv.row({grid[i], up[i].n_es, down[i].n_es});
        gap = std::max(gap, std::abs(up[i].n_es - down[i].n_es));
      }
    });
    if (cfg.emit_plot) {
      PlotSeries a{"up", grid, {}}, b{"down", grid, {}};
      for (std::size_t i = 0; i < grid.size(); ++i) {
        a.y.push_back(up[i].n_es);
        b.y.push_back(down[i].n_es);
      }
      write_svg_plot(detail::plot_path(cfg, "hysteresis"), "classical hysteresis", "Delta (gamma)", {a, b});
    }
    log << "classical: max |up - down| = " << format_number(gap) << '\n';
    return;
  }
  const auto set = steady_roots(cfg.params);
  detail::with_output(cfg, out, [&](std::ostream& os) {
    CsvWriter csv(os);
    csv.header({"n_es", "alpha_re", "alpha_im", "lambda_cap", "stable"});
    for (const auto& r : set.roots)
      csv.row({r.n_es, r.alpha_s.real(), r.alpha_s.imag(), r.lambda_cap, r.stable ? 1.0 : 0.0});
  });
  log << "classical: " << set.roots.size() << " root(s), " << (set.bistable ? "bistable" : "not bistable");
  for (const auto& r : set.roots)
    if (r.marginal) log << ", marginal root at n=" << format_number(r.n_es) << " classified unstable";
  log << '\n';
}

inline void cmd_linearized(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  const auto set = steady_roots(cfg.params);
  int n = 0;
  detail::with_output(cfg, out, [&](std::ostream& os) {
    CsvWriter csv(os);
    csv.header({"n_es", "lambda_cap", "fluct_number", "n_e_corrected", "q_lin", "q_ratio"});
    for (const auto& r : set.stable_roots()) {
      const auto l = linearized_observables(cfg.params, r.n_es);
      csv.row({l.n_es, l.lambda_cap, l.fluct_number, l.n_e_corrected, l.q_lin, l.q_ratio});
      ++n;
    }
  });
  log << "linearized: " << n << " stable root(s)\n";
}

inline void cmd_analytic(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  const auto a = analytic_observables(cfg.params);
  detail::with_output(cfg, out, [&](std::ostream& os) {
    CsvWriter csv(os);
    csv.header({"n_e", "q", "b_re", "b_im", "b_abs"});
    csv.row({a.n_e, a.q, a.b_mean.real(), a.b_mean.imag(), std::abs(a.b_mean)});
  });
  log << "analytic: n_e = " << format_number(a.n_e) << ", Q = " << format_number(a.q) << '\n';
}

inline void cmd_wigner(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  const auto rho = quantum_steady(cfg.params, cfg.dim);
  const auto map = wigner(rho);
  detail::with_output(cfg, out, [&](std::ostream& os) {
    CsvWriter csv(os);
    csv.header({"x", "p", "w"});
    for (std::size_t i = 0; i < map.x_grid.size(); ++i)
      for (std::size_t j = 0; j < map.p_grid.size(); ++j) csv.row({map.x_grid[i], map.p_grid[j], map.values(i, j)});
  });
  log << "wigner: min W = " << format_number(map.min()) << ", negativity volume = "
      << format_number(negativity_volume(map)) << ", integral = " << format_number(map.integral()) << '\n';
}

inline void cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  CompareOptions co;
  co.n_samples = cfg.samples;
  co.fock_dim = cfg.dim.value_or(kDefaultFockDim);
  co.evolve.ode = detail::ode_from(cfg);
  const auto cmp = compare_models(cfg.params, cfg.t_final, co);
  detail::with_output(cfg, out, [&](std::ostream& os) {
    CsvWriter csv(os);
    csv.header({"t", "n_e_boson", "q_boson", "n_e_spin", "q_spin"});
    for (std::size_t i = 0; i < cmp.boson.times.size(); ++i)
      csv.row({cmp.boson.times[i], cmp.boson.records[i].n_e, cmp.boson.records[i].mandel_q, cmp.spin.records[i].n_e,
               cmp.spin.records[i].mandel_q});
  });
  if (cfg.emit_plot)
    detail::plot_trajectories(detail::plot_path(cfg, "compare"), "bosonized vs exact spin model",
                              {{"boson", &cmp.boson}, {"spin", &cmp.spin}});
  log << "compare: N = " << cfg.params.n_atoms << ", max |n_e boson - spin| = " << format_number(cmp.max_n_e_deviation)
      << ", max |Q boson - spin| = " << format_number(cmp.max_q_deviation) << '\n';
}

// ---- figure recipes --------------------------------------------------------

inline constexpr std::array<const char*, 8> kFigureNames{"fig1", "fig2a", "fig2b", "fig3", "figA1", "figA2", "figS4", "figD"};

/// Fixed-parameter data sets behind the named figures; gamma = 1, chi = 10 throughout.
inline void reproduce_figure(const std::string& name, const std::string& out_dir, bool plot, std::ostream& log) {
  if (std::find_if(kFigureNames.begin(), kFigureNames.end(), [&](const char* n) { return name == n; }) ==
      kFigureNames.end())
    throw UsageError("unknown figure '" + name + "'");
  const std::filesystem::path dir(out_dir.empty() ? "." : out_dir);
  std::filesystem::create_directories(dir);
  auto path = [&](const std::string& f) { return (dir / f).string(); };
  ModelParams base;
  base.gamma = 1.0;
  base.chi = 10.0;
  base.lambda = 0.6;
  base.n_atoms = 6;

  if (name == "fig1") {
    std::vector<Trajectory> trs;
    for (double d : {-5.0, 0.0, 5.0}) {
      ModelParams p = base;
      p.delta = d;
      trs.push_back(evolve(p, DensityMatrix::vacuum(kDefaultFockDim), 10.0, 201));
      auto f = open_output(path("fig1_delta_" + detail::tag(d) + ".csv"));
      detail::write_trajectory(f, trs.back());
      log << "fig1: Delta = " << format_number(d) << " final Q = " << format_number(trs.back().records.back().mandel_q)
          << '\n';
    }
    if (plot)
      detail::plot_trajectories(path("fig1.svg"), "n_e and Q vs time",
                                {{"D=-5", &trs[0]}, {"D=0", &trs[1]}, {"D=5", &trs[2]}});
  } else if (name == "fig2a") {
    const SweepSpec dgrid{Axis::kDelta, -2.0, 8.0, 41};
    auto f = open_output(path("fig2a.csv"));
    CsvWriter csv(f);
    csv.header({"lambda", "delta", "n_e_quantum", "n_e_analytic", "q_quantum", "q_analytic"});
    std::vector<PlotSeries> series;
    for (int k = 1; k <= 10; ++k) {
      ModelParams p = base;
      p.lambda = 0.1 * k;
      const auto res = run_sweep(p, dgrid, std::nullopt, {true, false, false, true});
      PlotSeries s{"lambda=" + format_number(p.lambda), {}, {}};
      for (const auto& r : res.rows) {
        csv.row({p.lambda, r.axis, r.quantum->n_e, r.analytic->n_e, r.quantum->mandel_q, r.analytic->q});
        s.x.push_back(r.axis);
        s.y.push_back(r.quantum->n_e);
      }
      series.push_back(std::move(s));
    }
    if (plot) write_svg_plot(path("fig2a.svg"), "steady-state n_e over (lambda, Delta)", "Delta (gamma)", series);
    log << "fig2a: 10 x 41 grid written\n";
  } else if (name == "fig2b" || name == "fig3" || name == "figS4") {
    const std::vector<double> lambdas = name == "fig3" ? std::vector<double>{1.0} : std::vector<double>{0.3, 0.6};
    const SweepSpec dgrid{Axis::kDelta, -10.0, 10.0, 201};
    for (double lam : lambdas) {
      ModelParams p = base;
      p.lambda = lam;
      const std::string stem = name + "_lambda_" + detail::tag(lam);
      if (name == "figS4") {
        const auto res = run_sweep(p, dgrid, std::nullopt, {true, false, false, true});
        auto f = open_output(path(stem + ".csv"));
        CsvWriter csv(f);
        csv.header({"delta", "b_abs_quantum", "n_e_quantum", "q_quantum", "b_abs_analytic", "n_e_analytic",
                    "q_analytic"});
        for (const auto& r : res.rows)
          csv.row({r.axis, std::abs(r.quantum->b_mean), r.quantum->n_e, r.quantum->mandel_q,
                   std::abs(r.analytic->b_mean), r.analytic->n_e, r.analytic->q});
        if (plot) {
          std::vector<PlotSeries> series{{"|b| quantum", {}, {}}, {"|b| analytic", {}, {}},
                                         {"n_e quantum", {}, {}}, {"n_e analytic", {}, {}},
                                         {"Q quantum", {}, {}},   {"Q analytic", {}, {}}};
          for (const auto& r : res.rows) {
            const double ys[6] = {std::abs(r.quantum->b_mean), std::abs(r.analytic->b_mean), r.quantum->n_e,
                                  r.analytic->n_e, r.quantum->mandel_q, r.analytic->q};
            for (int k = 0; k < 6; ++k) {
              series[k].x.push_back(r.axis);
              series[k].y.push_back(ys[k]);
            }
          }
          write_svg_plot(path(stem + ".svg"), name + " lambda=" + format_number(lam), "Delta (gamma)", series);
        }
        log << name << ": lambda = " << format_number(lam) << ", " << detail::sweep_summary(res) << '\n';
        continue;
      }
      const auto res = run_sweep(p, dgrid, std::nullopt);
      {
        auto f = open_output(path(stem + ".csv"));
        detail::write_sweep(f, res);
      }
      if (plot) detail::plot_sweep(path(stem + ".svg"), name + " lambda=" + format_number(lam), "Delta (gamma)", res);
      if (name == "fig2b") {
        std::vector<double> grid(dgrid.count);
        for (int i = 0; i < dgrid.count; ++i) grid[i] = dgrid.value(i);
        const auto up = hysteresis_sweep(p, grid, SweepDirection::kUp);
        auto down = hysteresis_sweep(p, grid, SweepDirection::kDown);
        std::reverse(down.begin(), down.end());
        auto f = open_output(path(stem + "_hysteresis.csv"));
        CsvWriter csv(f);
        csv.header({"delta", "n_es_up", "n_es_down"});
        for (std::size_t i = 0; i < grid.size(); ++i) csv.row({grid[i], up[i].n_es, down[i].n_es});
      }
      log << name << ": lambda = " << format_number(lam) << ", " << detail::sweep_summary(res) << '\n';
    }
  } else if (name == "figA1") {
    for (double d : {-5.0, 0.0, 5.0}) {
      ModelParams p = base;
      p.delta = d;
      const auto cmp = compare_models(p, 10.0);
      auto f = open_output(path("figA1_delta_" + detail::tag(d) + ".csv"));
      CsvWriter csv(f);
      csv.header({"t", "n_e_boson", "q_boson", "n_e_spin", "q_spin"});
      for (std::size_t i = 0; i < cmp.boson.times.size(); ++i)
        csv.row({cmp.boson.times[i], cmp.boson.records[i].n_e, cmp.boson.records[i].mandel_q,
                 cmp.spin.records[i].n_e, cmp.spin.records[i].mandel_q});
      if (plot)
        detail::plot_trajectories(path("figA1_delta_" + detail::tag(d) + ".svg"), "boson vs spin, Delta=" +
                                  format_number(d), {{"boson", &cmp.boson}, {"spin", &cmp.spin}});
      log << "figA1: Delta = " << format_number(d) << ", max |dn_e| = " << format_number(cmp.max_n_e_deviation)
          << ", max |dQ| = " << format_number(cmp.max_q_deviation) << '\n';
    }
  } else if (name == "figA2") {
    const SweepSpec dgrid{Axis::kDelta, -10.0, 10.0, 41};
    for (double lam : {0.6, 1.0}) {
      ModelParams p = base;
      p.lambda = lam;
      std::vector<ObservableSet> spin(dgrid.count), boson(dgrid.count);
      parallel_for(std::size_t(dgrid.count), [&](std::size_t i) {
        ModelParams q = p;
        q.delta = dgrid.value(int(i));
        const auto ss = spin_steady_state(q);
        spin[i] = spin_observables(build_spin_system(q), ss.rho.matrix());
        boson[i] = observables(steady_state_adaptive(q).rho);
      });
      auto f = open_output(path("figA2_lambda_" + detail::tag(lam) + ".csv"));
      CsvWriter csv(f);
      csv.header({"delta", "n_e_spin", "q_spin", "n_e_boson", "q_boson"});
      double dev = 0.0;
      std::vector<PlotSeries> series{
          {"n_e spin", {}, {}}, {"n_e boson", {}, {}}, {"Q spin", {}, {}}, {"Q boson", {}, {}}};
      for (int i = 0; i < dgrid.count; ++i) {
        csv.row({dgrid.value(i), spin[i].n_e, spin[i].mandel_q, boson[i].n_e, boson[i].mandel_q});
        dev = std::max(dev, std::abs(spin[i].n_e - boson[i].n_e));
        const double ys[4] = {spin[i].n_e, boson[i].n_e, spin[i].mandel_q, boson[i].mandel_q};
        for (int k = 0; k < 4; ++k) {
          series[k].x.push_back(dgrid.value(i));
          series[k].y.push_back(ys[k]);
        }
      }
      if (plot)
        write_svg_plot(path("figA2_lambda_" + detail::tag(lam) + ".svg"), "spin vs boson steady state, lambda=" +
                       format_number(lam), "Delta (gamma)", series);
      log << "figA2: lambda = " << format_number(lam) << ", max |n_e spin - boson| = " << format_number(dev) << '\n';
    }
  } else if (name == "figD") {
    for (double d : {0.0, 5.0}) {
      ModelParams p = base;
      p.delta = d;
      const auto map = wigner(steady_state_adaptive(p).rho);
      auto f = open_output(path("figD_delta_" + detail::tag(d) + ".csv"));
      CsvWriter csv(f);
      csv.header({"x", "p", "w"});
      for (std::size_t i = 0; i < map.x_grid.size(); ++i)
        for (std::size_t j = 0; j < map.p_grid.size(); ++j) csv.row({map.x_grid[i], map.p_grid[j], map.values(i, j)});
      if (plot) {
        // line plots only: draw the cut along the p grid point nearest to 0
        std::size_t j0 = 0;
        for (std::size_t j = 1; j < map.p_grid.size(); ++j)
          if (std::abs(map.p_grid[j]) < std::abs(map.p_grid[j0])) j0 = j;
        PlotSeries cut{"W(x, 0)", map.x_grid, {}};
        for (std::size_t i = 0; i < map.x_grid.size(); ++i) cut.y.push_back(map.values(i, j0));
        write_svg_plot(path("figD_delta_" + detail::tag(d) + ".svg"), "Wigner cut, Delta=" + format_number(d), "x",
                       {cut});
      }
      log << "figD: Delta = " << format_number(d) << ", min W = " << format_number(map.min())
          << ", negativity volume = " << format_number(negativity_volume(map)) << '\n';
    }
  }
}

/// Executes one configured run. Errors are reported on `log` and mapped to
/// exit codes; nothing propagates.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  try {
    switch (cfg.command) {
      case Command::kEvolve: cmd_evolve(cfg, out, log); break;
      case Command::kSpin: cmd_spin(cfg, out, log); break;
      case Command::kSteady: {
        const double v = cfg.params.delta;
        cmd_sweep(cfg, SweepSpec{Axis::kDelta, v, v, 1}, out, log);
        break;
      }
      case Command::kSweep: cmd_sweep(cfg, *cfg.grid, out, log); break;
      case Command::kClassical: cmd_classical(cfg, out, log); break;
      case Command::kLinearized: cmd_linearized(cfg, out, log); break;
      case Command::kAnalytic: cmd_analytic(cfg, out, log); break;
      case Command::kWigner: cmd_wigner(cfg, out, log); break;
      case Command::kCompare: cmd_compare(cfg, out, log); break;
      case Command::kFigure: reproduce_figure(cfg.figure, cfg.output_path, cfg.emit_plot, log); break;
    }
  } catch (const UsageError& e) {
    log << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    log << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    log << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::filesystem::filesystem_error& e) {
    log << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace rydkerr::cli

#endif  // RYDKERR_CLI_RUN_HPP
