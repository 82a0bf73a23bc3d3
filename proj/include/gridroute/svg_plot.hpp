// Copyright 2026 The gridroute Authors
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

#pragma once

#include <string>
#include <vector>

namespace gridroute {

/// One line of a chart: a value per category, in category order. Use NaN
/// for categories the series has no data for; the line breaks there.
struct PlotSeries {
    std::string label;
    std::vector<double> values;
};

// Minimal hand-rolled SVG line chart over categorical x positions (one per
// entry of `categories`), with axis labels, tick marks, a legend, and an
// optional log10 y scale. No external dependencies.
std::string render_line_chart(const std::string& title,
                              const std::string& x_label,
                              const std::string& y_label,
                              const std::vector<std::string>& categories,
                              const std::vector<PlotSeries>& series,
                              bool log_y);

}  // namespace gridroute
