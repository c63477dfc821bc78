#pragma once

#include <cmath>

#include "rsh/curve.hpp"
#include "rsh/tolerances.hpp"

namespace rsh {

// Frame and scalar invariants of a unit-speed curve at one parameter value.
// sigma is the slant-helix function kappa^2/(kappa^2+tau^2)^(3/2) * (tau/kappa)';
// it is constant exactly when the principal normal keeps a fixed angle to a
// fixed axis.
struct FrenetApparatus {
    Vec3 t;
    Vec3 n;
    Vec3 b;
    double kappa = 0.0;
    double tau = 0.0;
    double sigma = 0.0;
};

// tau/kappa at s. Throws curvature_vanishes at the flat points where the
// ratio is undefined.
inline double tau_kappa_ratio(const AnalyticCurve& curve, double s, const Tolerances& tol = {}) {
    const Vec3 d1 = curve.evaluate(s, 1);
    const Vec3 d2 = curve.evaluate(s, 2);
    const Vec3 d3 = curve.evaluate(s, 3);
    const double kappa_sq = dot(d2, d2);
    if (!(kappa_sq > tol.eps_kappa * tol.eps_kappa))
        throw curvature_vanishes("tau/kappa undefined: curvature at floor");
    return triple(d1, d2, d3) / (kappa_sq * std::sqrt(kappa_sq));
}

// d/ds of norm(alpha''), from orders 2 and 3 of the oracle.
inline double kappa_prime(const AnalyticCurve& curve, double s, const Tolerances& tol = {}) {
    const Vec3 d2 = curve.evaluate(s, 2);
    const Vec3 d3 = curve.evaluate(s, 3);
    const double kappa = norm(d2);
    if (!(kappa > tol.eps_kappa)) throw curvature_vanishes("kappa' undefined: curvature at floor");
    return dot(d2, d3) / kappa;
}

// Full apparatus at s. The frame follows the unit-speed conventions
// t = alpha', n = alpha''/|alpha''|, b = t x n (right-handed), and
// tau = det(alpha', alpha'', alpha''')/|alpha''|^2.
//
// (tau/kappa)' comes from the order-4 oracle on a closed-form backend; on a
// finite-difference backend it is a 5-point stencil over the ratio itself,
// with a step ladder because the usable step spans orders of magnitude
// between tightly wound and nearly straight regions.
inline FrenetApparatus frenet_at(const AnalyticCurve& curve, double s, const Tolerances& tol = {}) {
    FrenetApparatus ap;
    const Vec3 d1 = curve.evaluate(s, 1);
    const Vec3 d2 = curve.evaluate(s, 2);
    const Vec3 d3 = curve.evaluate(s, 3);

    ap.kappa = norm(d2);
    if (!(ap.kappa > tol.eps_kappa))
        throw curvature_vanishes("frenet_at: curvature below eps_kappa");
    ap.t = d1;
    ap.n = d2 / ap.kappa;
    ap.b = cross(ap.t, ap.n);
    ap.tau = triple(d1, d2, d3) / (ap.kappa * ap.kappa);

    double ratio_prime;
    if (curve.backend() == Backend::closed_form) {
        const Vec3 d4 = curve.evaluate(s, 4);
        const double kp = dot(d2, d3) / ap.kappa;
        const double tau_prime =
            triple(d1, d2, d4) / (ap.kappa * ap.kappa) - 2.0 * ap.tau * kp / ap.kappa;
        ratio_prime = tau_prime / ap.kappa - ap.tau * kp / (ap.kappa * ap.kappa);
    } else {
        auto ratio = [&](double x) { return tau_kappa_ratio(curve, x, tol); };
        const double base = 0.05 * (1.0 + std::fabs(s));
        ratio_prime = laddered_derivative(ratio, s, 1, base, -8, 6, curve.domain().lo,
                                          curve.domain().hi);
    }

    const double g = ap.kappa * ap.kappa + ap.tau * ap.tau;
    ap.sigma = ap.kappa * ap.kappa / (g * std::sqrt(g)) * ratio_prime;
    return ap;
}

}  // namespace rsh
