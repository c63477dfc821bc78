#pragma once

// Test-side oracles, deliberately sharing no numerics with the library:
//   - quad-precision derivatives built from O(h^2) stencils plus two
//     Richardson levels (the library uses O(h^4) kernels, so agreement is
//     meaningful);
//   - an arc-length twisted cubic with independently derived kappa/tau, as a
//     smooth unit-speed curve that is neither rectifying nor slant;
//   - circular helix and unit circle fixtures with exact evaluators.

#include <quadmath.h>

#include <cmath>
#include <stdexcept>

#include "rsh/curve.hpp"
#include "rsh/vec3.hpp"

namespace oracle {

// __float128 components: the order-4 stencil divides by h^4 ~ 1e-10, which
// turns long-double node rounding into ~1e-8 output noise, right at the test
// margins. Quad nodes put the floor out of reach and leave truncation as the
// only error to budget for.
struct QVec {
    __float128 x = 0, y = 0, z = 0;

    QVec operator+(const QVec& o) const { return {x + o.x, y + o.y, z + o.z}; }
    QVec operator-(const QVec& o) const { return {x - o.x, y - o.y, z - o.z}; }
    QVec operator*(__float128 k) const { return {x * k, y * k, z * k}; }

    rsh::Vec3 to_vec3() const {
        return {static_cast<double>(x), static_cast<double>(y), static_cast<double>(z)};
    }
};

// Derivative of order 1..4 of f: __float128 -> QVec, via the plain O(h^2)
// central stencil refined with two Richardson levels, giving O(h^6). The
// second level matters for family members whose phase turns fast (|c1/cos
// theta| large): one level leaves h^4 truncation above the test margins.
template <class F>
QVec quad_derivative(F&& f, long double s0, int order, long double h0) {
    const __float128 s = s0;
    const __float128 h = h0;
    auto base = [&](__float128 hh) -> QVec {
        switch (order) {
            case 1: return (f(s + hh) - f(s - hh)) * (0.5Q / hh);
            case 2:
                return (f(s + hh) - f(s) * 2.0Q + f(s - hh)) * (1.0Q / (hh * hh));
            case 3:
                return (f(s + 2 * hh) - f(s + hh) * 2.0Q + f(s - hh) * 2.0Q - f(s - 2 * hh)) *
                       (0.5Q / (hh * hh * hh));
            case 4:
                return (f(s + 2 * hh) - f(s + hh) * 4.0Q + f(s) * 6.0Q - f(s - hh) * 4.0Q +
                        f(s - 2 * hh)) *
                       (1.0Q / (hh * hh * hh * hh));
            default: throw std::logic_error("quad_derivative: order 1..4");
        }
    };
    auto level1 = [&](__float128 hh) -> QVec {
        return (base(hh) * 4.0Q - base(2 * hh)) * (1.0Q / 3.0Q);
    };
    return (level1(h) * 16.0Q - level1(2 * h)) * (1.0Q / 15.0Q);
}

// ---- twisted cubic (t, t^2, t^3), re-parametrized by arc length ----

inline long double tc_speed(long double t) {
    return std::sqrt(1.0L + 4.0L * t * t + 9.0L * t * t * t * t);
}

// Composite 5-point Gauss-Legendre quadrature of the speed on [0, t].
inline long double tc_arclength(long double t) {
    static const long double xs[5] = {-0.906179845938663992797626878299L,
                                      -0.538469310105683091036314420700L, 0.0L,
                                      0.538469310105683091036314420700L,
                                      0.906179845938663992797626878299L};
    static const long double ws[5] = {0.236926885056189087514264040720L,
                                      0.478628670499366468041291514836L,
                                      0.568888888888888888888888888889L,
                                      0.478628670499366468041291514836L,
                                      0.236926885056189087514264040720L};
    const int panels = 64;
    const long double dt = t / panels;
    long double total = 0.0L;
    for (int i = 0; i < panels; ++i) {
        const long double mid = (i + 0.5L) * dt;
        for (int q = 0; q < 5; ++q) total += ws[q] * tc_speed(mid + 0.5L * dt * xs[q]);
    }
    return total * 0.5L * dt;
}

// Newton inversion of the (strictly increasing) arc length.
inline long double tc_t_of_s(long double s) {
    long double t = s;
    for (int it = 0; it < 60; ++it) {
        const long double step = (tc_arclength(t) - s) / tc_speed(t);
        t -= step;
        if (std::fabs(step) < 1e-17L * (1.0L + std::fabs(t))) break;
    }
    return t;
}

inline rsh::Vec3 tc_position_at_arclength(double s) {
    const long double t = tc_t_of_s(static_cast<long double>(s));
    return QVec{t, t * t, t * t * t}.to_vec3();
}

// kappa/tau of the twisted cubic in its natural parameter t. These are the
// textbook chart-independent formulas |g' x g''|/|g'|^3 and
// det(g',g'',g''')/|g' x g''|^2, evaluated at t = t(s).
inline void tc_kappa_tau(double s, double& kappa, double& tau) {
    const long double t = tc_t_of_s(static_cast<long double>(s));
    const long double t2 = t * t;
    const long double cross_sq = 4.0L * (9.0L * t2 * t2 + 9.0L * t2 + 1.0L);
    const long double speed_sq = 1.0L + 4.0L * t2 + 9.0L * t2 * t2;
    kappa = static_cast<double>(std::sqrt(cross_sq) / (speed_sq * std::sqrt(speed_sq)));
    tau = static_cast<double>(12.0L / cross_sq);
}

inline rsh::AnalyticCurve twisted_cubic_unit_speed(rsh::Interval dom = {-2.0, 2.0}) {
    return rsh::AnalyticCurve::finite_difference(
        dom, [](double s) { return tc_position_at_arclength(s); });
}

// ---- circular helix (a cos(s/c), a sin(s/c), b s/c), c = sqrt(a^2+b^2) ----

inline rsh::AnalyticCurve circular_helix(double a, double b, rsh::Interval dom = {-10.0, 10.0}) {
    const double c = std::sqrt(a * a + b * b);
    auto eval = [a, b, c](double s, int order) -> rsh::Vec3 {
        const double w = s / c;
        const double p = 1.0 / std::pow(c, order);
        // successive derivatives of (cos, sin) cycle with period 4
        switch (order % 4) {
            case 0:
                return {a * std::cos(w) * p, a * std::sin(w) * p, order == 0 ? b * w : 0.0};
            case 1: return {-a * std::sin(w) * p, a * std::cos(w) * p, b / c};
            case 2: return {-a * std::cos(w) * p, -a * std::sin(w) * p, 0.0};
            default: return {a * std::sin(w) * p, -a * std::cos(w) * p, 0.0};
        }
    };
    return rsh::AnalyticCurve::closed_form(dom, eval);
}

inline rsh::AnalyticCurve unit_circle(rsh::Interval dom = {-10.0, 10.0}) {
    auto eval = [](double s, int order) -> rsh::Vec3 {
        switch (order % 4) {
            case 0: return {std::cos(s), std::sin(s), 0.0};
            case 1: return {-std::sin(s), std::cos(s), 0.0};
            case 2: return {-std::cos(s), -std::sin(s), 0.0};
            default: return {std::sin(s), -std::cos(s), 0.0};
        }
    };
    return rsh::AnalyticCurve::closed_form(dom, eval);
}

}  // namespace oracle
