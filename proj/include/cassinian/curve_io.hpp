#pragma once

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "cassinian/ball.hpp"
#include "cassinian/errors.hpp"

namespace cassinian {

/// Shortest exact decimal form used in every emitted file (17 significant
/// digits round-trip doubles losslessly).
inline std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

/// CSV columns: component_id,theta,t,x,y.  LF line endings, '.' decimal.
inline void write_boundary_csv(const BoundaryCurve& curve, std::ostream& os) {
    os << "component_id,theta,t,x,y\n";
    for (std::size_t ci = 0; ci < curve.components.size(); ++ci)
        for (const CurveSample& s : curve.components[ci])
            os << ci << ',' << g17(s.theta) << ',' << g17(s.t) << ',' << g17(s.x) << ','
               << g17(s.y) << '\n';
}

struct CsvRow {
    std::size_t component_id;
    double theta, t, x, y;
};

inline std::vector<CsvRow> parse_boundary_csv(std::istream& is) {
    std::vector<CsvRow> rows;
    std::string line;
    if (!std::getline(is, line) || line != "component_id,theta,t,x,y")
        throw IOError("bad boundary CSV header");
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        CsvRow row{};
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ls(line);
        if (!(ls >> row.component_id >> row.theta >> row.t >> row.x >> row.y))
            throw IOError("bad boundary CSV row: " + line);
        rows.push_back(row);
    }
    return rows;
}

namespace detail {

inline const char* kStrokes[] = {"#1a1a1a", "#c03028", "#2858c0", "#208848"};
inline const char* kDashes[] = {"", "0.08 0.04", "0.03 0.03", "0.10 0.03 0.02 0.03"};

/// One path per component; the y axis is flipped to mathematical orientation
/// by negating ordinates.
inline void append_curve_paths(std::string& svg, const BoundaryCurve& curve, std::size_t style) {
    for (const std::vector<CurveSample>& comp : curve.components) {
        svg += "  <path d=\"";
        for (std::size_t i = 0; i < comp.size(); ++i) {
            svg += i == 0 ? "M " : "L ";
            svg += g17(comp[i].x);
            svg += ' ';
            svg += g17(-comp[i].y);
            svg += ' ';
        }
        svg += "Z\" stroke=\"";
        svg += kStrokes[style % 4];
        svg += "\"";
        if (kDashes[style % 4][0] != '\0') {
            svg += " stroke-dasharray=\"";
            svg += kDashes[style % 4];
            svg += "\"";
        }
        svg += "/>\n";
    }
}

} // namespace detail

/// SVG gallery of ball boundaries: viewBox "-4 -4 8 8", 200 px per unit,
/// stroke width 0.01 units, puncture dot at the origin, center marker at
/// (1, 0), legend top-left.  Byte-deterministic.
inline std::string svg_boundaries(const std::vector<BoundaryCurve>& curves,
                                  const std::vector<std::string>& labels) {
    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-4 -4 8 8\" "
           "width=\"1600\" height=\"1600\">\n";
    svg += " <g fill=\"none\" stroke-width=\"0.01\">\n";
    for (std::size_t i = 0; i < curves.size(); ++i)
        detail::append_curve_paths(svg, curves[i], i);
    svg += " </g>\n";
    svg += " <circle cx=\"0\" cy=\"0\" r=\"0.035\" fill=\"#1a1a1a\"/>\n";
    svg += " <path d=\"M 0.95 0 L 1.05 0 M 1 -0.05 L 1 0.05\" stroke=\"#1a1a1a\" "
           "stroke-width=\"0.012\"/>\n";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const double y = -3.55 + 0.28 * static_cast<double>(i);
        svg += " <line x1=\"-3.8\" y1=\"" + g17(y) + "\" x2=\"-3.45\" y2=\"" + g17(y) +
               "\" stroke=\"" + detail::kStrokes[i % 4] + "\" stroke-width=\"0.02\"";
        if (detail::kDashes[i % 4][0] != '\0')
            svg += " stroke-dasharray=\"" + std::string(detail::kDashes[i % 4]) + "\"";
        svg += "/>\n";
        svg += " <text x=\"-3.35\" y=\"" + g17(y + 0.07) +
               "\" font-family=\"monospace\" font-size=\"0.2\" fill=\"#1a1a1a\">" + labels[i] +
               "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

inline std::string svg_boundary(const BoundaryCurve& curve, const std::string& label) {
    return svg_boundaries({curve}, {label});
}

} // namespace cassinian
