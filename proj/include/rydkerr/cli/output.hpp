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

// CSV and SVG emitters. CSV numbers use 12 significant digits in the C
// locale with '\n' line endings so identical runs give identical bytes.

#ifndef RYDKERR_CLI_OUTPUT_HPP
#define RYDKERR_CLI_OUTPUT_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "rydkerr/cli/config.hpp"

namespace rydkerr::cli {

inline std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline std::string format_field(const std::optional<double>& v) { return v ? format_number(*v) : std::string{}; }

class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void header(const std::vector<std::string>& cols) { row_strings(cols); }

  void row(const std::vector<std::optional<double>>& values) {
    std::vector<std::string> s;
    s.reserve(values.size());
    for (const auto& v : values) s.push_back(format_field(v));
    row_strings(s);
  }

 private:
  void row_strings(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out_ << ',';
      out_ << cells[i];
    }
    out_ << '\n';
  }
  std::ostream& out_;
};

/// Opens `path` for binary writing (so '\n' is never translated).
inline std::ofstream open_output(const std::string& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw UsageError("cannot write '" + path + "'");
  return f;
}

struct PlotSeries {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;  ///< NaN breaks the polyline
};

/// Minimal SVG line chart: frame, axis range labels, one polyline per series.
inline void write_svg_plot(const std::string& path, const std::string& title, const std::string& xlabel,
                           const std::vector<PlotSeries>& series) {
  constexpr double W = 640, H = 420, L = 70, R = 20, T = 40, B = 50;
  double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
  for (const auto& s : series)
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.y[i])) continue;
      xmin = std::min(xmin, s.x[i]);
      xmax = std::max(xmax, s.x[i]);
      ymin = std::min(ymin, s.y[i]);
      ymax = std::max(ymax, s.y[i]);
    }
  if (!(xmax > xmin)) xmax = xmin + 1.0;
  if (!(ymax > ymin)) ymax = ymin + 1.0;
  auto px = [&](double x) { return L + (x - xmin) / (xmax - xmin) * (W - L - R); };
  auto py = [&](double y) { return H - B - (y - ymin) / (ymax - ymin) * (H - T - B); };
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#17becf"};

  auto f = open_output(path);
  f << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
  f << "<rect x=\"0\" y=\"0\" width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
  f << "<rect x=\"" << L << "\" y=\"" << T << "\" width=\"" << (W - L - R) << "\" height=\"" << (H - T - B)
    << "\" fill=\"none\" stroke=\"black\"/>\n";
  f << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" << title << "</text>\n";
  f << "<text x=\"" << W / 2 << "\" y=\"" << H - 12 << "\" text-anchor=\"middle\" font-size=\"13\">" << xlabel
    << "</text>\n";
  f << "<text x=\"" << L << "\" y=\"" << H - B + 16 << "\" font-size=\"11\">" << format_number(xmin) << "</text>\n";
  f << "<text x=\"" << W - R << "\" y=\"" << H - B + 16 << "\" text-anchor=\"end\" font-size=\"11\">"
    << format_number(xmax) << "</text>\n";
  f << "<text x=\"" << L - 4 << "\" y=\"" << H - B << "\" text-anchor=\"end\" font-size=\"11\">"
    << format_number(ymin) << "</text>\n";
  f << "<text x=\"" << L - 4 << "\" y=\"" << T + 10 << "\" text-anchor=\"end\" font-size=\"11\">"
    << format_number(ymax) << "</text>\n";
  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& s = series[k];
    const char* col = colors[k % 7];
    std::string pts;
    auto flush = [&] {
      if (!pts.empty())
        f << "<polyline fill=\"none\" stroke=\"" << col << "\" stroke-width=\"1.5\" points=\"" << pts << "\"/>\n";
      pts.clear();
    };
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.y[i])) {
        flush();
        continue;
      }
      pts += format_number(px(s.x[i])) + "," + format_number(py(s.y[i])) + " ";
    }
    flush();
    f << "<text x=\"" << L + 8 << "\" y=\"" << T + 16 + 15 * k << "\" font-size=\"12\" fill=\"" << col << "\">"
      << s.name << "</text>\n";
  }
  f << "</svg>\n";
}

}  // namespace rydkerr::cli

#endif  // RYDKERR_CLI_OUTPUT_HPP
