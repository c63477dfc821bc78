#pragma once

#include <cmath>
#include <vector>

#include "rsh/frenet.hpp"
#include "rsh/samples.hpp"

namespace rsh {

enum class FrameVector { tangent, normal, binormal };

inline const char* frame_vector_name(FrameVector which) {
    switch (which) {
        case FrameVector::tangent: return "tangent";
        case FrameVector::normal: return "normal";
        case FrameVector::binormal: return "binormal";
    }
    return "?";
}

// Trace of one frame vector on the unit sphere, kept parametrized by the
// base curve's arc length (not re-parametrized by the trace's own length).
struct SphericalTrace {
    FrameVector which = FrameVector::tangent;
    std::vector<double> s;
    std::vector<Vec3> points;

    size_t size() const { return s.size(); }
};

inline SphericalTrace indicatrix(const AnalyticCurve& curve, FrameVector which,
                                 const std::vector<double>& grid, const Tolerances& tol = {}) {
    SphericalTrace trace;
    trace.which = which;
    trace.s = grid;
    trace.points.reserve(grid.size());
    for (double s : grid) {
        const FrenetApparatus ap = frenet_at(curve, s, tol);
        switch (which) {
            case FrameVector::tangent: trace.points.push_back(ap.t); break;
            case FrameVector::normal: trace.points.push_back(ap.n); break;
            case FrameVector::binormal: trace.points.push_back(ap.b); break;
        }
    }
    return trace;
}

inline SphericalTrace indicatrix(const AnalyticCurve& curve, FrameVector which,
                                 const Tolerances& tol = {}) {
    return indicatrix(curve, which, uniform_grid(curve.domain(), 512), tol);
}

struct LatitudeStats {
    double mean_cos = 0.0;
    double max_dev = 0.0;
};

// Statistics of dot(point, axis) over a trace. A constant value means the
// traced vector keeps a fixed angle with the axis, i.e. the trace sits on a
// circle of latitude.
inline LatitudeStats latitude_check(const SphericalTrace& trace, const Vec3& axis) {
    if (trace.points.empty()) throw empty_trace("latitude_check: empty trace");
    double sum = 0.0;
    for (const Vec3& p : trace.points) sum += dot(p, axis);
    LatitudeStats stats;
    stats.mean_cos = sum / static_cast<double>(trace.points.size());
    for (const Vec3& p : trace.points)
        stats.max_dev = std::max(stats.max_dev, std::fabs(dot(p, axis) - stats.mean_cos));
    return stats;
}

}  // namespace rsh
