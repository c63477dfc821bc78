#pragma once

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>
#include <vector>

#include "rsh/csv.hpp"
#include "rsh/errors.hpp"
#include "rsh/vec3.hpp"

namespace rsh {

enum class Projection { xy, xz, yz };

inline Projection parse_projection(std::string_view name) {
    if (name == "xy") return Projection::xy;
    if (name == "xz") return Projection::xz;
    if (name == "yz") return Projection::yz;
    throw invalid_params("projection must be one of xy, xz, yz");
}

struct Point2 {
    double a = 0.0;
    double b = 0.0;
};

inline Point2 project(const Vec3& p, Projection proj) {
    switch (proj) {
        case Projection::xy: return {p.x, p.y};
        case Projection::xz: return {p.x, p.z};
        case Projection::yz: return {p.y, p.z};
    }
    return {};
}

struct SvgOptions {
    // Cone silhouette lines b = ±sqrt(slope_sq)·a, drawn for xz/yz
    // projections when slope_sq > 0 (the cone is rotationally symmetric, so
    // its side-view silhouette is the same pair of lines either way).
    double cone_slope_sq = 0.0;
    double pad_fraction = 0.05;
    std::string stroke = "#1f6feb";
    std::string cone_stroke = "#999999";
};

// Minimal static SVG 1.1 picture: one polyline, coordinates kept in data
// units inside the viewBox (only the vertical axis is negated, since SVG's
// y grows downward). Downstream checks can therefore read exact curve
// coordinates back out of the points attribute.
inline void write_svg(std::ostream& os, const std::vector<Point2>& points, Projection proj,
                      const SvgOptions& opt = {}) {
    if (points.empty()) throw empty_trace("svg: no points to plot");

    double a_lo = points[0].a, a_hi = points[0].a;
    double b_lo = points[0].b, b_hi = points[0].b;
    for (const Point2& p : points) {
        a_lo = std::min(a_lo, p.a);
        a_hi = std::max(a_hi, p.a);
        b_lo = std::min(b_lo, p.b);
        b_hi = std::max(b_hi, p.b);
    }
    const bool cone = opt.cone_slope_sq > 0.0 && proj != Projection::xy;
    if (cone) {
        // Silhouette spans the data's horizontal range.
        const double slope = std::sqrt(opt.cone_slope_sq);
        for (double a : {a_lo, a_hi}) {
            b_lo = std::min(b_lo, -std::fabs(slope * a));
            b_hi = std::max(b_hi, std::fabs(slope * a));
        }
    }
    double width = a_hi - a_lo;
    double height = b_hi - b_lo;
    const double pad = opt.pad_fraction * std::max({width, height, 1e-12});
    a_lo -= pad;
    a_hi += pad;
    b_lo -= pad;
    b_hi += pad;
    width = a_hi - a_lo;
    height = b_hi - b_lo;
    const double stroke_w = 0.004 * std::max(width, height);

    // Screen y runs downward: flip b. The viewBox is the flipped data box.
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
       << format_double(a_lo) << ' ' << format_double(-b_hi) << ' ' << format_double(width)
       << ' ' << format_double(height) << "\">\n";
    if (cone) {
        const double slope = std::sqrt(opt.cone_slope_sq);
        for (double sgn : {1.0, -1.0}) {
            os << "  <line x1=\"" << format_double(a_lo) << "\" y1=\""
               << format_double(-sgn * slope * a_lo) << "\" x2=\"" << format_double(a_hi)
               << "\" y2=\"" << format_double(-sgn * slope * a_hi) << "\" stroke=\""
               << opt.cone_stroke << "\" stroke-width=\"" << format_double(stroke_w * 0.5)
               << "\"/>\n";
        }
    }
    os << "  <polyline fill=\"none\" stroke=\"" << opt.stroke << "\" stroke-width=\""
       << format_double(stroke_w) << "\" points=\"";
    for (size_t i = 0; i < points.size(); ++i) {
        if (i) os << ' ';
        os << format_double(points[i].a) << ',' << format_double(-points[i].b);
    }
    os << "\"/>\n</svg>\n";
}

}  // namespace rsh
