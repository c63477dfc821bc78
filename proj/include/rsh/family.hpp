#pragma once

#include <cmath>

#include "rsh/curve.hpp"
#include "rsh/vec3.hpp"

namespace rsh {

// Parameters of the closed-form family of rectifying slant helices. With
// f(s) = c1*s + c2, a member's tau/kappa ratio is the line
// sign(c1 cos theta) * f(s), its principal normal keeps the fixed angle theta
// to the z-axis, and c3 = |c1 tan(theta)| sets the curvature scale. theta
// must avoid multiples of pi/2: cos(theta) = 0 kills the construction's axis
// component and sin(theta) = 0 kills its curvature.
struct FamilyParams {
    double c1 = 1.0;
    double c2 = 0.0;
    double cos_theta = 0.5;

    // Derived, filled by the factory. sin_theta is taken positive, matching
    // the convention under which every branch sign below was resolved.
    double sin_theta = 0.0;
    double tan_theta = 0.0;
    double sec_theta = 0.0;
    double c3 = 0.0;

    static FamilyParams from_cos_theta(double c1, double c2, double cos_theta) {
        if (!std::isfinite(c1) || !std::isfinite(c2) || !std::isfinite(cos_theta))
            throw invalid_params("family parameters must be finite");
        if (c1 == 0.0) throw invalid_params("c1 must be nonzero (tau/kappa must have slope)");
        if (!(std::fabs(cos_theta) > 0.0) || !(std::fabs(cos_theta) < 1.0))
            throw invalid_params("need 0 < |cos(theta)| < 1 (theta away from multiples of pi/2)");
        FamilyParams p;
        p.c1 = c1;
        p.c2 = c2;
        p.cos_theta = cos_theta;
        p.sin_theta = std::sqrt((1.0 - cos_theta) * (1.0 + cos_theta));
        p.tan_theta = p.sin_theta / cos_theta;
        p.sec_theta = 1.0 / cos_theta;
        p.c3 = std::fabs(c1 * p.tan_theta);
        return p;
    }

    static FamilyParams from_theta(double c1, double c2, double theta) {
        return from_cos_theta(c1, c2, std::cos(theta));
    }

    double f(double s) const { return c1 * s + c2; }

    // Angle of the turning phase h(s) = sec(theta) * atan(f(s)).
    double phase(double s) const { return sec_theta * std::atan(f(s)); }

    // Sign relating the analytic normal formula to alpha''/kappa; +1 on the
    // canonical branch c1 > 0, cos(theta) > 0.
    double normal_sign() const { return (c1 > 0.0 ? 1.0 : -1.0) * (cos_theta > 0.0 ? 1.0 : -1.0); }

    // sigma = kappa^2/(kappa^2+tau^2)^(3/2) (tau/kappa)' evaluates to
    // cot(theta) on the whole member: the ratio's realized slope is
    // sign(c1 cos theta) * c1 = |c1| sign(cos theta), so the sign of c1
    // cancels and the sign of cos(theta) survives.
    double sigma_constant() const { return cos_theta / sin_theta; }
};

// Curvature/torsion pair of a family member at s:
//   kappa = c3 / (1+f^2)^(3/2),   tau = sg * kappa * f,
// where sg = sign(c1)*sign(cos theta). The torsion is c1 tan(theta) f / u^(3/2)
// and carries the sign of c1 tan(theta); kappa only keeps its magnitude c3.
struct FamilyEvaluation {
    double kappa = 0.0;
    double tau = 0.0;
};

inline FamilyEvaluation closed_form_kappa_tau(const FamilyParams& p, double s) {
    const double f = p.f(s);
    const double u = 1.0 + f * f;
    const double w = 1.0 / (u * std::sqrt(u));
    return {p.c3 * w, p.normal_sign() * p.c3 * f * w};
}

// Principal normal of the family member, resolved to the actual
// alpha''/|alpha''| direction (the source formula leaves the overall sign
// open; the realized sign is sign(c1)*sign(cos theta)).
inline Vec3 closed_form_normal(const FamilyParams& p, double s) {
    const double h = p.phase(s);
    const double sg = p.normal_sign();
    return {sg * p.sin_theta * std::cos(h), sg * p.sin_theta * std::sin(h), sg * p.cos_theta};
}

namespace family_detail {

// Extended-precision workspace vector. Divided-difference consumers of the
// evaluator (stencil verification at step ~1e-4) amplify node rounding by
// ~5e8, so the evaluator computes internally in long double and narrows at
// the end; the doubles it returns are then correctly rounded values.
struct LVec3 {
    long double x = 0.0L, y = 0.0L, z = 0.0L;

    Vec3 narrow() const {
        return {static_cast<double>(x), static_cast<double>(y), static_cast<double>(z)};
    }
};

inline LVec3 operator+(const LVec3& a, const LVec3& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
}
inline LVec3 operator*(const LVec3& a, long double k) { return {a.x * k, a.y * k, a.z * k}; }
inline LVec3 cross(const LVec3& a, const LVec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

// Everything the order-0..4 evaluator needs at one s. t and alpha'' come from
// direct differentiation of the position formula; orders 3 and 4 follow from
// the frame equations with the closed-form kappa, tau and their derivatives,
// which keeps every order exact in exact arithmetic.
struct Eval {
    long double f, u, r;  // f = c1 s + c2, u = 1+f^2, r = sqrt(u)
    long double ch, sh;   // cos/sin of the phase h(s)
    LVec3 pos, t, n, b;
    long double kappa, kappa_p, kappa_pp, tau, tau_p;
};

inline Eval eval_at(const FamilyParams& p, double s) {
    const long double c1 = p.c1;
    const long double ct = p.cos_theta;
    const long double st = std::sqrt((1.0L - ct) * (1.0L + ct));
    const long double c3 = std::fabs(c1) * st / std::fabs(ct);
    const long double sg = p.normal_sign();

    Eval e;
    e.f = c1 * static_cast<long double>(s) + static_cast<long double>(p.c2);
    e.u = 1.0L + e.f * e.f;
    e.r = std::sqrt(e.u);
    const long double h = std::atan(e.f) / ct;
    e.ch = std::cos(h);
    e.sh = std::sin(h);

    e.pos = LVec3{-ct * e.ch, -ct * e.sh, st} * (e.r / c1);
    e.t = LVec3{-(e.f * ct * e.ch - e.sh), -(e.f * ct * e.sh + e.ch), e.f * st} * (1.0L / e.r);
    e.n = LVec3{sg * st * e.ch, sg * st * e.sh, sg * ct};
    e.b = cross(e.t, e.n);

    const long double w3 = 1.0L / (e.u * e.r);      // u^(-3/2)
    const long double w5 = w3 / e.u;                // u^(-5/2)
    const long double w7 = w5 / e.u;                // u^(-7/2)
    e.kappa = c3 * w3;
    e.tau = sg * c3 * e.f * w3;
    e.kappa_p = -3.0L * c1 * c3 * e.f * w5;
    e.kappa_pp = 3.0L * c1 * c1 * c3 * (4.0L * e.f * e.f - 1.0L) * w7;
    e.tau_p = sg * c1 * c3 * (1.0L - 2.0L * e.f * e.f) * w5;
    return e;
}

}  // namespace family_detail

// Closed-form curve for a family member. The evaluator serves orders 0-4:
//   order 3 = -kappa^2 t + kappa' n + kappa tau b
//   order 4 = -3 kappa kappa' t + (kappa'' - kappa^3 - kappa tau^2) n
//             + (2 kappa' tau + kappa tau') b
// kappa_scale multiplies kappa and its derivatives in orders 2-4. It exists
// for mutation testing only: a scale of 1.01 models a 1% curvature bug that
// the verification suite is required to catch. Leave it at 1.0 otherwise.
inline AnalyticCurve make_rs_helix(const FamilyParams& p, Interval domain = Interval{-10.0, 10.0},
                                   double kappa_scale = 1.0) {
    if (!(kappa_scale > 0.0) || !std::isfinite(kappa_scale))
        throw invalid_params("kappa_scale must be positive and finite");
    auto eval = [p, kappa_scale](double s, int order) -> Vec3 {
        auto e = family_detail::eval_at(p, s);
        const long double ks = kappa_scale;
        e.kappa *= ks;
        e.kappa_p *= ks;
        e.kappa_pp *= ks;
        switch (order) {
            case 0: return e.pos.narrow();
            case 1: return e.t.narrow();
            case 2: return (e.n * e.kappa).narrow();
            case 3:
                return (e.t * (-e.kappa * e.kappa) + e.n * e.kappa_p + e.b * (e.kappa * e.tau))
                    .narrow();
            case 4:
                return (e.t * (-3.0L * e.kappa * e.kappa_p) +
                        e.n * (e.kappa_pp - e.kappa * e.kappa * e.kappa -
                               e.kappa * e.tau * e.tau) +
                        e.b * (2.0L * e.kappa_p * e.tau + e.kappa * e.tau_p))
                    .narrow();
            default: throw invalid_params("family evaluator: order must be 0..4");
        }
    };
    return AnalyticCurve::closed_form(domain, eval);
}

// Finite-difference twin of make_rs_helix: same positions, derivatives
// synthesized from stencils. Used to cross-check the two backends.
inline AnalyticCurve make_rs_helix_fd(const FamilyParams& p,
                                      Interval domain = Interval{-10.0, 10.0},
                                      double step_scale = 1e-4) {
    auto position = [p](double s) { return family_detail::eval_at(p, s).pos.narrow(); };
    return AnalyticCurve::finite_difference(domain, position, step_scale);
}

// Components of the fixed axis u = (0,0,1) in the moving frame:
// u = lambda1 t + lambda2 n + lambda3 b identically along the curve.
// lambda2 is the constant sign(c1)*|cos theta|; on the canonical branch it is
// cos(theta), the cosine of the slant angle.
struct AxisComponents {
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double lambda3 = 0.0;
};

inline AxisComponents axis_components(const FamilyParams& p, double s) {
    const double f = p.f(s);
    const double r = std::sqrt(1.0 + f * f);
    const double sg = p.normal_sign();
    return {f * p.sin_theta / r, sg * p.cos_theta, sg * p.sin_theta / r};
}

// The right circular cone tan^2(theta) (x^2 + y^2) = z^2 (apex at the
// origin, axis along z) that carries every member with this theta.
struct ConeParams {
    double slope_sq = 0.0;  // tan^2(theta)
};

inline ConeParams cone_of(const FamilyParams& p) { return {p.tan_theta * p.tan_theta}; }

inline double cone_residual(const ConeParams& cone, const Vec3& point) {
    return cone.slope_sq * (point.x * point.x + point.y * point.y) - point.z * point.z;
}

}  // namespace rsh
