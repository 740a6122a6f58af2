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

#ifndef TURNAROUND_TOOLS_SVG_CHART_H_
#define TURNAROUND_TOOLS_SVG_CHART_H_

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace turnaround::tools {

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

// Static SVG bar chart; one bar per (label, value), zero line drawn.
void WriteBarChart(const std::string& title,
                   const std::vector<std::pair<std::string, double>>& bars,
                   std::ostream& out);

// Static SVG line chart sharing one x and y axis across series.
void WriteLineChart(const std::string& title, const std::vector<Series>& series,
                    std::ostream& out);

}  // namespace turnaround::tools

#endif  // TURNAROUND_TOOLS_SVG_CHART_H_
