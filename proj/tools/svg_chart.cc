// Copyright 2026 The Turnaround Authors
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

#include "svg_chart.h"

#include <algorithm>
#include <array>
#include <cmath>

#include "turnaround/text_format.h"

namespace turnaround::tools {
namespace {

constexpr double kWidth = 800;
constexpr double kHeight = 400;
constexpr double kMargin = 50;
constexpr std::array<const char*, 10> kPalette = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string Num(double v) { return FormatDouble(v, 6); }

std::string Escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

void Header(const std::string& title, std::ostream& out) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << Num(kWidth)
      << "\" height=\"" << Num(kHeight) << "\" font-family=\"sans-serif\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << Num(kWidth / 2) << "\" y=\"24\" text-anchor=\"middle\""
      << " font-size=\"16\">" << Escape(title) << "</text>\n";
}

}  // namespace

void WriteBarChart(const std::string& title,
                   const std::vector<std::pair<std::string, double>>& bars,
                   std::ostream& out) {
  const ClassicLocale classic(out);
  Header(title, out);
  double lo = 0.0, hi = 0.0;
  for (const auto& [label, v] : bars) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (hi == lo) hi = lo + 1.0;
  const double plot_h = kHeight - 2 * kMargin;
  const double plot_w = kWidth - 2 * kMargin;
  auto y_of = [&](double v) { return kMargin + (hi - v) / (hi - lo) * plot_h; };
  const double zero = y_of(0.0);
  const double slot = bars.empty() ? plot_w : plot_w / bars.size();
  out << "<line x1=\"" << Num(kMargin) << "\" y1=\"" << Num(zero) << "\" x2=\""
      << Num(kWidth - kMargin) << "\" y2=\"" << Num(zero)
      << "\" stroke=\"black\"/>\n";
  out << "<text x=\"4\" y=\"" << Num(y_of(hi) + 4) << "\" font-size=\"10\">"
      << Num(hi) << "</text>\n";
  out << "<text x=\"4\" y=\"" << Num(y_of(lo) + 4) << "\" font-size=\"10\">"
      << Num(lo) << "</text>\n";
  for (std::size_t i = 0; i < bars.size(); ++i) {
    const auto& [label, v] = bars[i];
    const double x = kMargin + i * slot + slot * 0.1;
    const double top = std::min(zero, y_of(v));
    const double h = std::abs(y_of(v) - zero);
    out << "<rect x=\"" << Num(x) << "\" y=\"" << Num(top) << "\" width=\""
        << Num(slot * 0.8) << "\" height=\"" << Num(h) << "\" fill=\""
        << (v >= 0 ? kPalette[0] : kPalette[3]) << "\"/>\n";
    out << "<text x=\"" << Num(x + slot * 0.4) << "\" y=\""
        << Num(kHeight - kMargin + 14) << "\" font-size=\"9\""
        << " text-anchor=\"middle\">" << Escape(label) << "</text>\n";
  }
  out << "</svg>\n";
}

void WriteLineChart(const std::string& title, const std::vector<Series>& series,
                    std::ostream& out) {
  const ClassicLocale classic(out);
  Header(title, out);
  double x_lo = INFINITY, x_hi = -INFINITY, y_lo = 0.0, y_hi = 0.0;
  for (const Series& s : series) {
    for (const auto& [x, y] : s.points) {
      x_lo = std::min(x_lo, x);
      x_hi = std::max(x_hi, x);
      y_lo = std::min(y_lo, y);
      y_hi = std::max(y_hi, y);
    }
  }
  if (!std::isfinite(x_lo)) x_lo = x_hi = 0.0;
  if (x_hi == x_lo) x_hi = x_lo + 1.0;
  if (y_hi == y_lo) y_hi = y_lo + 1.0;
  const double plot_h = kHeight - 2 * kMargin;
  const double plot_w = kWidth - 2 * kMargin - 100;
  auto px = [&](double x) { return kMargin + (x - x_lo) / (x_hi - x_lo) * plot_w; };
  auto py = [&](double y) { return kMargin + (y_hi - y) / (y_hi - y_lo) * plot_h; };

  out << "<line x1=\"" << Num(kMargin) << "\" y1=\"" << Num(py(y_lo))
      << "\" x2=\"" << Num(kMargin + plot_w) << "\" y2=\"" << Num(py(y_lo))
      << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << Num(kMargin) << "\" y=\"" << Num(py(y_lo) + 16)
      << "\" font-size=\"10\">" << Num(x_lo) << "</text>\n";
  out << "<text x=\"" << Num(kMargin + plot_w) << "\" y=\"" << Num(py(y_lo) + 16)
      << "\" font-size=\"10\" text-anchor=\"end\">" << Num(x_hi) << "</text>\n";
  out << "<text x=\"4\" y=\"" << Num(py(y_hi) + 4) << "\" font-size=\"10\">"
      << Num(y_hi) << "</text>\n";
  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = kPalette[i % kPalette.size()];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" points=\"";
    for (std::size_t j = 0; j < series[i].points.size(); ++j) {
      if (j > 0) out << ' ';
      out << Num(px(series[i].points[j].first)) << ','
          << Num(py(series[i].points[j].second));
    }
    out << "\"/>\n";
    out << "<text x=\"" << Num(kMargin + plot_w + 10) << "\" y=\""
        << Num(kMargin + 14 * i) << "\" font-size=\"10\" fill=\"" << color
        << "\">" << Escape(series[i].label) << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace turnaround::tools
