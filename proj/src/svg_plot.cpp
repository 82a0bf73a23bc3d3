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

#include "gridroute/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace gridroute {

namespace {

constexpr double kWidth = 860;
constexpr double kHeight = 520;
constexpr double kLeft = 80;
constexpr double kRight = kWidth - 210;  // room for the legend
constexpr double kTop = 50;
constexpr double kBottom = kHeight - 70;

constexpr const char* kPalette[] = {
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
    "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f",
};
constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

std::string escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

std::string fmt_tick(double v) {
    std::ostringstream os;
    if (std::abs(v) >= 1e5 || (std::abs(v) < 1e-2 && v != 0)) {
        os.precision(1);
        os << std::scientific << v;
    } else {
        os.precision(5);
        os << v;
    }
    return os.str();
}

struct YScale {
    double lo = 0;
    double hi = 1;
    bool log = false;

    double place(double v) const {
        double t = log ? std::log10(v) : v;
        return kBottom - (t - lo) / (hi - lo) * (kBottom - kTop);
    }
};

}  // namespace

std::string render_line_chart(const std::string& title,
                              const std::string& x_label,
                              const std::string& y_label,
                              const std::vector<std::string>& categories,
                              const std::vector<PlotSeries>& series,
                              bool log_y) {
    // Collect the value range, ignoring NaNs; log charts clamp values below
    // 0.1 so zero timings do not blow up the scale.
    double vmin = std::numeric_limits<double>::infinity();
    double vmax = -std::numeric_limits<double>::infinity();
    const auto clean = [&](double v) {
        if (log_y && v < 0.1) return 0.1;
        return v;
    };
    for (const auto& s : series) {
        for (double v : s.values) {
            if (std::isnan(v)) continue;
            vmin = std::min(vmin, clean(v));
            vmax = std::max(vmax, clean(v));
        }
    }
    if (!(vmin <= vmax)) {  // no data at all
        vmin = log_y ? 0.1 : 0.0;
        vmax = log_y ? 10.0 : 1.0;
    }

    YScale scale;
    scale.log = log_y;
    if (log_y) {
        scale.lo = std::floor(std::log10(vmin));
        scale.hi = std::ceil(std::log10(vmax));
        if (scale.hi - scale.lo < 1) scale.hi = scale.lo + 1;
    } else {
        scale.lo = 0;  // depths and counts read best from zero
        scale.hi = vmax <= 0 ? 1 : vmax * 1.08;
        if (vmin < 0) scale.lo = vmin * 1.08;
    }

    const std::size_t ncat = categories.size();
    const auto x_at = [&](std::size_t k) {
        if (ncat <= 1) return (kLeft + kRight) / 2;
        return kLeft + static_cast<double>(k) * (kRight - kLeft) /
                           static_cast<double>(ncat - 1);
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
        << kHeight << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<text x=\"" << (kLeft + kRight) / 2 << "\" y=\"28\" "
        << "text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"17\">"
        << escape(title) << "</text>\n";

    // Axes.
    svg << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft
        << "\" y2=\"" << kBottom << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << kLeft << "\" y1=\"" << kBottom << "\" x2=\""
        << kRight << "\" y2=\"" << kBottom << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << (kLeft + kRight) / 2 << "\" y=\"" << kHeight - 18
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"14\">"
        << escape(x_label) << "</text>\n";
    svg << "<text x=\"22\" y=\"" << (kTop + kBottom) / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"14\" transform=\"rotate(-90 22 "
        << (kTop + kBottom) / 2 << ")\">" << escape(y_label) << "</text>\n";

    // Y ticks: powers of ten on log charts, five even steps otherwise.
    if (log_y) {
        for (double e = scale.lo; e <= scale.hi + 1e-9; e += 1) {
            const double y = kBottom - (e - scale.lo) / (scale.hi - scale.lo) *
                                           (kBottom - kTop);
            svg << "<line x1=\"" << kLeft - 4 << "\" y1=\"" << y << "\" x2=\""
                << kRight << "\" y2=\"" << y
                << "\" stroke=\"#dddddd\"/>\n";
            svg << "<text x=\"" << kLeft - 8 << "\" y=\"" << y + 4
                << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
                   "font-size=\"12\">1e"
                << static_cast<long long>(e) << "</text>\n";
        }
    } else {
        for (int t = 0; t <= 5; ++t) {
            const double v = scale.lo + (scale.hi - scale.lo) * t / 5.0;
            const double y = scale.place(v);
            svg << "<line x1=\"" << kLeft - 4 << "\" y1=\"" << y << "\" x2=\""
                << kRight << "\" y2=\"" << y
                << "\" stroke=\"#dddddd\"/>\n";
            svg << "<text x=\"" << kLeft - 8 << "\" y=\"" << y + 4
                << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
                   "font-size=\"12\">"
                << fmt_tick(v) << "</text>\n";
        }
    }

    // X ticks: one per category.
    for (std::size_t k = 0; k < ncat; ++k) {
        const double x = x_at(k);
        svg << "<line x1=\"" << x << "\" y1=\"" << kBottom << "\" x2=\"" << x
            << "\" y2=\"" << kBottom + 5 << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << x << "\" y=\"" << kBottom + 20
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
               "font-size=\"12\">"
            << escape(categories[k]) << "</text>\n";
    }

    // Series: polyline segments (broken at NaN) plus point markers.
    for (std::size_t s = 0; s < series.size(); ++s) {
        const char* color = kPalette[s % kPaletteSize];
        std::ostringstream points;
        bool in_run = false;
        for (std::size_t k = 0; k < series[s].values.size() && k < ncat; ++k) {
            const double raw = series[s].values[k];
            if (std::isnan(raw)) {
                if (in_run) {
                    svg << "<polyline fill=\"none\" stroke=\"" << color
                        << "\" stroke-width=\"2\" points=\"" << points.str()
                        << "\"/>\n";
                    points.str("");
                    in_run = false;
                }
                continue;
            }
            const double x = x_at(k);
            const double y = scale.place(clean(raw));
            points << fmt(x) << "," << fmt(y) << " ";
            in_run = true;
            svg << "<circle cx=\"" << x << "\" cy=\"" << y
                << "\" r=\"3\" fill=\"" << color << "\"/>\n";
        }
        if (in_run) {
            svg << "<polyline fill=\"none\" stroke=\"" << color
                << "\" stroke-width=\"2\" points=\"" << points.str()
                << "\"/>\n";
        }
    }

    // Legend, to the right of the plot area.
    const double lx = kRight + 16;
    for (std::size_t s = 0; s < series.size(); ++s) {
        const double ly = kTop + 10 + 22 * static_cast<double>(s);
        svg << "<line x1=\"" << lx << "\" y1=\"" << ly << "\" x2=\"" << lx + 22
            << "\" y2=\"" << ly << "\" stroke=\"" << kPalette[s % kPaletteSize]
            << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << lx + 28 << "\" y=\"" << ly + 4
            << "\" font-family=\"sans-serif\" font-size=\"12\">"
            << escape(series[s].label) << "</text>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

}  // namespace gridroute
