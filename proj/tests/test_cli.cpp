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


#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rydkerr/cli/config.hpp"
#include "rydkerr/cli/output.hpp"
#include "rydkerr/cli/run.hpp"
#include "rydkerr/cli/sweep.hpp"

namespace rydkerr::cli {
namespace {

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("rydkerr_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

std::vector<std::string> split(const std::string& row) {
  std::vector<std::string> out;
  std::stringstream ss(row);
  for (std::string cell; std::getline(ss, cell, ',');) out.push_back(cell);
  if (!row.empty() && row.back() == ',') out.emplace_back();
  return out;
}

TEST(Config, ParsesCommentsAndUnderscores) {
  std::istringstream in("# run file\ndelta = 5   # pair resonance\nn_atoms=4\n\n t_final = 3.5\n");
  const auto kv = parse_config_text(in);
  EXPECT_EQ(kv.at("delta"), "5");
  EXPECT_EQ(kv.at("n-atoms"), "4");
  EXPECT_EQ(kv.at("t-final"), "3.5");
  std::istringstream bad("delta 5\n");
  EXPECT_THROW(parse_config_text(bad), UsageError);
}

TEST(Config, FlagsOverrideFileAndDefaultsHold) {
  const KeyValues file{{"delta", "5"}, {"lambda", "0.6"}, {"chi", "10"}};
  const KeyValues flags{{"delta", "0"}};
  const auto cfg = make_config("analytic", file, flags);
  EXPECT_EQ(cfg.command, Command::kAnalytic);
  EXPECT_EQ(cfg.params.delta, 0.0);
  EXPECT_EQ(cfg.params.lambda, 0.6);
  EXPECT_EQ(cfg.params.gamma, 1.0);
  EXPECT_EQ(cfg.params.n_atoms, 6);
  EXPECT_FALSE(cfg.dim);
}

TEST(Config, CommandMayComeFromFile) {
  EXPECT_EQ(make_config("", {{"command", "sweep"}, {"start", "0"}, {"stop", "1"}, {"count", "3"}}, {}).command,
            Command::kSweep);
}

TEST(Config, ReadsFileFromDisk) {
  const auto dir = scratch_dir("config");
  const auto path = (dir / "run.cfg").string();
  std::ofstream(path) << "lambda = 0.3\nchi = 10\n";
  const auto cfg = make_config("steady", read_config_file(path), {});
  EXPECT_EQ(cfg.params.lambda, 0.3);
  EXPECT_THROW(read_config_file((dir / "missing.cfg").string()), UsageError);
}

TEST(Config, RejectsInvalidInput) {
  EXPECT_THROW(make_config("frobnicate", {}, {}), UsageError);
  EXPECT_THROW(make_config("steady", {}, {{"bogus", "1"}}), UsageError);
  EXPECT_THROW(make_config("steady", {}, {{"delta", "abc"}}), UsageError);
  EXPECT_THROW(make_config("sweep", {}, {}), UsageError);
  EXPECT_THROW(make_config("sweep", {}, {{"start", "0"}, {"stop", "1"}, {"count", "1"}}), UsageError);
  EXPECT_THROW(make_config("sweep", {}, {{"axis", "chi"}, {"start", "0"}, {"stop", "1"}, {"count", "3"}}),
               UsageError);
  EXPECT_THROW(make_config("steady", {}, {{"gamma", "0"}}), UsageError);
  EXPECT_THROW(make_config("steady", {}, {{"dim", "1"}}), UsageError);
  EXPECT_THROW(make_config("figure", {}, {}), UsageError);
}

TEST(Output, NumberFormatting) {
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(format_number(1.5e-20), "1.5e-20");
  EXPECT_EQ(format_field(std::nullopt), "");
}

TEST(Run, SteadyEmitsOneRowMatchingAnalytic) {
  const auto cfg = make_config("steady", {}, {{"delta", "0"}, {"lambda", "0.6"}, {"chi", "10"}});
  std::ostringstream out, log;
  ASSERT_EQ(run(cfg, out, log), kExitOk);
  const auto rows = lines(out.str());
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0],
            "axis,n_e_quantum,q_quantum,b_abs_quantum,n_e_classical_low,n_e_classical_high,n_e_linearized,"
            "q_linearized,n_e_analytic,q_analytic");
  const auto f = split(rows[1]);
  ASSERT_EQ(f.size(), 10u);
  EXPECT_NEAR(std::stod(f[1]), std::stod(f[8]), 1e-6);
  EXPECT_NE(log.str().find("max |n_e quantum - analytic|"), std::string::npos);
}

TEST(Run, AbsentBackendsLeaveEmptyFields) {
  const auto cfg = make_config("steady", {}, {{"delta", "0"}, {"lambda", "0.6"}, {"chi", "0"}});
  std::ostringstream out, log;
  ASSERT_EQ(run(cfg, out, log), kExitOk);
  const auto f = split(lines(out.str())[1]);
  ASSERT_EQ(f.size(), 10u);
  EXPECT_EQ(f[8], "");
  EXPECT_EQ(f[9], "");
  EXPECT_NEAR(std::stod(f[1]), 1.44, 1e-8);
}

TEST(Run, SweepIsDeterministicAndOrderedUnderParallelism) {
  ModelParams p;
  p.lambda = 0.6;
  p.chi = 10.0;
  const SweepSpec grid{Axis::kDelta, -3.0, 6.0, 10};
  const auto serial = run_sweep(p, grid, std::nullopt, {}, 1);
  const auto parallel = run_sweep(p, grid, std::nullopt, {}, 4);
  ASSERT_EQ(serial.rows.size(), 10u);
  ASSERT_EQ(parallel.rows.size(), 10u);
  for (int i = 0; i < 10; ++i) {
    EXPECT_EQ(serial.rows[i].axis, grid.value(i));
    EXPECT_EQ(sweep_fields(serial.rows[i]), sweep_fields(parallel.rows[i]));
  }
  EXPECT_GE(serial.max_n_e_deviation, 0.0);
  EXPECT_LT(serial.max_n_e_deviation, 1e-6);

  const auto cfg = make_config("sweep", {}, {{"lambda", "0.6"}, {"chi", "10"}, {"start", "-3"}, {"stop", "6"},
                                             {"count", "10"}});
  std::ostringstream a, b, log;
  ASSERT_EQ(run(cfg, a, log), kExitOk);
  ASSERT_EQ(run(cfg, b, log), kExitOk);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(a.str().find('\r'), std::string::npos);
}

TEST(Run, BistableSweepShowsTwoClassicalBranches) {
  ModelParams p;
  p.lambda = 0.6;
  p.chi = 10.0;
  const auto res = run_sweep(p, SweepSpec{Axis::kDelta, -10.0, 10.0, 201}, std::nullopt, {false, true, false, false});
  int split_points = 0;
  for (const auto& r : res.rows)
    if (r.n_e_classical_high && *r.n_e_classical_high - *r.n_e_classical_low > 1e-6) ++split_points;
  EXPECT_GT(split_points, 5);
}

TEST(Run, ExitCodes) {
  std::ostringstream out, log;
  // numerical failure: truncation too small for the Wigner map
  EXPECT_EQ(run(make_config("wigner", {}, {{"dim", "4"}, {"lambda", "2"}}), out, log), kExitNumerical);
  EXPECT_NE(log.str().find("top-level population"), std::string::npos);
  // capacity violation is a usage error
  EXPECT_EQ(run(make_config("spin", {}, {{"n-atoms", "12"}}), out, log), kExitUsage);
  // unknown figure
  EXPECT_EQ(run(make_config("figure", {}, {{"figure", "fig9"}}), out, log), kExitUsage);
  // unwritable output path
  EXPECT_EQ(run(make_config("analytic", {}, {{"chi", "10"}, {"out", "/nonexistent/dir/x.csv"}}), out, log),
            kExitUsage);
}

TEST(Run, SweepFailureNamesTheParameterPoint) {
  ModelParams p;
  p.lambda = 30.0;
  try {
    run_sweep(p, SweepSpec{Axis::kDelta, 0.0, 1.0, 2}, std::nullopt, {true, false, false, false}, 1);
    FAIL() << "expected PointError";
  } catch (const PointError& e) {
    EXPECT_EQ(e.params.lambda, 30.0);
    EXPECT_NE(std::string(e.what()).find("lambda=30"), std::string::npos);
  }
}

TEST(Run, WritesFilesAndPlots) {
  const auto dir = scratch_dir("files");
  const auto csv = (dir / "trace.csv").string();
  std::ostringstream out, log;
  const auto cfg = make_config(
      "evolve", {}, {{"delta", "5"}, {"lambda", "0.6"}, {"chi", "10"}, {"out", csv}, {"plot", "true"}, {"samples", "21"}});
  ASSERT_EQ(run(cfg, out, log), kExitOk);
  EXPECT_TRUE(out.str().empty());
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "t,n_e,q,b_re,b_im,p_double");
  EXPECT_TRUE(std::filesystem::exists(dir / "trace.svg"));
}

TEST(Figures, TimeTraceRecipeWritesThreeDetunings) {
  const auto dir = scratch_dir("fig1");
  std::ostringstream log;
  reproduce_figure("fig1", dir.string(), true, log);
  for (const char* name : {"fig1_delta_m5.csv", "fig1_delta_0.csv", "fig1_delta_5.csv"})
    EXPECT_TRUE(std::filesystem::exists(dir / name)) << name;
  std::ifstream in(dir / "fig1_delta_5.csv");
  std::string line, last;
  while (std::getline(in, line)) last = line;
  EXPECT_GT(std::stod(split(last)[2]), 0.0);
  EXPECT_THROW(reproduce_figure("fig9", dir.string(), false, log), UsageError);
}

TEST(Figures, WignerRecipeWritesMapsAndCuts) {
  const auto dir = scratch_dir("figD");
  std::ostringstream log;
  reproduce_figure("figD", dir.string(), true, log);
  for (const char* name : {"figD_delta_0.csv", "figD_delta_5.csv", "figD_delta_0.svg", "figD_delta_5.svg"})
    EXPECT_TRUE(std::filesystem::exists(dir / name)) << name;
  std::ifstream in(dir / "figD_delta_0.csv");
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "x,p,w");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 201 * 201);
}

TEST(Figures, StrongerDriveWeakensPairResonanceBunching) {
  ModelParams p;
  p.delta = 5.0;
  p.chi = 10.0;
  p.lambda = 0.6;
  const double q_weak = evaluate_point(p, 5.0, std::nullopt, {true, false, false, false}).quantum->mandel_q;
  p.lambda = 1.0;
  const double q_strong = evaluate_point(p, 5.0, std::nullopt, {true, false, false, false}).quantum->mandel_q;
  EXPECT_GT(q_weak, 0.0);
  EXPECT_LT(q_strong, q_weak);
}

}  // namespace
}  // namespace rydkerr::cli
