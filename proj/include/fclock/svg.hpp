/* Copyright 2026 The feynman-clock Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

namespace fclock {

/// One plotted series: points plus a stroke color.
struct SvgSeries {
    std::string label;
    std::vector<std::pair<double, double>> points;
    std::string color = "#1f77b4";
    bool markers = false;  // draw circles at points (scatter)
};

struct SvgPlotSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<SvgSeries> series;
    bool log_x = false;
    bool log_y = false;
    int width = 720;
    int height = 480;
    std::string description;  // embedded as <desc> (e.g. config echo)
};

namespace detail {

inline std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

inline std::string svg_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace detail

/// Static line/scatter plot as a standalone SVG document.
inline std::string render_svg_plot(const SvgPlotSpec& spec) {
    const double ml = 70, mr = 20, mt = 40, mb = 55;
    const double pw = spec.width - ml - mr, ph = spec.height - mt - mb;

    const auto tx = [&](double v) { return spec.log_x ? std::log10(v) : v; };
    const auto ty = [&](double v) { return spec.log_y ? std::log10(v) : v; };

    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    bool first = true;
    for (const auto& s : spec.series)
        for (const auto& [x, y] : s.points) {
            if (spec.log_x && x <= 0.0) continue;
            if (spec.log_y && y <= 0.0) continue;
            const double vx = tx(x), vy = ty(y);
            if (!std::isfinite(vx) || !std::isfinite(vy)) continue;
            if (first) {
                xmin = xmax = vx;
                ymin = ymax = vy;
                first = false;
            } else {
                xmin = std::min(xmin, vx);
                xmax = std::max(xmax, vx);
                ymin = std::min(ymin, vy);
                ymax = std::max(ymax, vy);
            }
        }
    if (xmax - xmin < 1e-300) xmax = xmin + 1.0;
    if (ymax - ymin < 1e-300) ymax = ymin + 1.0;

    const auto px = [&](double v) { return ml + (tx(v) - xmin) / (xmax - xmin) * pw; };
    const auto py = [&](double v) { return mt + (1.0 - (ty(v) - ymin) / (ymax - ymin)) * ph; };

    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(spec.width) +
           "\" height=\"" + std::to_string(spec.height) + "\">\n";
    if (!spec.description.empty())
        out += "  <desc>" + detail::xml_escape(spec.description) + "</desc>\n";
    out += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out += "  <text x=\"" + detail::svg_num(spec.width / 2.0) +
           "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\" font-family=\"sans-serif\">" +
           detail::xml_escape(spec.title) + "</text>\n";

    // Axes.
    out += "  <line x1=\"" + detail::svg_num(ml) + "\" y1=\"" + detail::svg_num(mt + ph) +
           "\" x2=\"" + detail::svg_num(ml + pw) + "\" y2=\"" + detail::svg_num(mt + ph) +
           "\" stroke=\"black\"/>\n";
    out += "  <line x1=\"" + detail::svg_num(ml) + "\" y1=\"" + detail::svg_num(mt) + "\" x2=\"" +
           detail::svg_num(ml) + "\" y2=\"" + detail::svg_num(mt + ph) + "\" stroke=\"black\"/>\n";

    // Ticks and labels.
    const int nticks = 5;
    for (int i = 0; i <= nticks; ++i) {
        const double fx = xmin + (xmax - xmin) * i / nticks;
        const double fy = ymin + (ymax - ymin) * i / nticks;
        const double sx = ml + pw * i / nticks;
        const double sy = mt + ph * (1.0 - static_cast<double>(i) / nticks);
        const double lx = spec.log_x ? std::pow(10.0, fx) : fx;
        const double ly = spec.log_y ? std::pow(10.0, fy) : fy;
        out += "  <line x1=\"" + detail::svg_num(sx) + "\" y1=\"" + detail::svg_num(mt + ph) +
               "\" x2=\"" + detail::svg_num(sx) + "\" y2=\"" + detail::svg_num(mt + ph + 5) +
               "\" stroke=\"black\"/>\n";
        out += "  <text x=\"" + detail::svg_num(sx) + "\" y=\"" + detail::svg_num(mt + ph + 18) +
               "\" text-anchor=\"middle\" font-size=\"11\" font-family=\"sans-serif\">" +
               detail::svg_num(lx) + "</text>\n";
        out += "  <line x1=\"" + detail::svg_num(ml - 5) + "\" y1=\"" + detail::svg_num(sy) +
               "\" x2=\"" + detail::svg_num(ml) + "\" y2=\"" + detail::svg_num(sy) +
               "\" stroke=\"black\"/>\n";
        out += "  <text x=\"" + detail::svg_num(ml - 8) + "\" y=\"" + detail::svg_num(sy + 4) +
               "\" text-anchor=\"end\" font-size=\"11\" font-family=\"sans-serif\">" +
               detail::svg_num(ly) + "</text>\n";
    }
    out += "  <text x=\"" + detail::svg_num(ml + pw / 2) + "\" y=\"" +
           detail::svg_num(spec.height - 12.0) +
           "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\">" +
           detail::xml_escape(spec.x_label) + "</text>\n";
    out += "  <text x=\"18\" y=\"" + detail::svg_num(mt + ph / 2) +
           "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\" transform=\"rotate(-90 18 " +
           detail::svg_num(mt + ph / 2) + ")\">" + detail::xml_escape(spec.y_label) + "</text>\n";

    for (const auto& s : spec.series) {
        if (s.markers) {
            for (const auto& [x, y] : s.points) {
                if ((spec.log_x && x <= 0.0) || (spec.log_y && y <= 0.0)) continue;
                out += "  <circle cx=\"" + detail::svg_num(px(x)) + "\" cy=\"" +
                       detail::svg_num(py(y)) + "\" r=\"3\" fill=\"" + s.color + "\"/>\n";
            }
        } else {
            std::string pts;
            for (const auto& [x, y] : s.points) {
                if ((spec.log_x && x <= 0.0) || (spec.log_y && y <= 0.0)) continue;
                pts += detail::svg_num(px(x)) + "," + detail::svg_num(py(y)) + " ";
            }
            out += "  <polyline fill=\"none\" stroke=\"" + s.color +
                   "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";
        }
    }

    // Legend.
    double ly0 = mt + 8;
    for (const auto& s : spec.series) {
        if (s.label.empty()) continue;
        out += "  <rect x=\"" + detail::svg_num(ml + pw - 150) + "\" y=\"" +
               detail::svg_num(ly0 - 8) + "\" width=\"12\" height=\"3\" fill=\"" + s.color +
               "\"/>\n";
        out += "  <text x=\"" + detail::svg_num(ml + pw - 132) + "\" y=\"" +
               detail::svg_num(ly0 - 3) + "\" font-size=\"11\" font-family=\"sans-serif\">" +
               detail::xml_escape(s.label) + "</text>\n";
        ly0 += 16;
    }

    out += "</svg>\n";
    return out;
}

}  // namespace fclock
