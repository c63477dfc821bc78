#pragma once

#include <cmath>
#include <string>

#include "rsh/classify.hpp"
#include "rsh/family.hpp"
#include "rsh/indicatrix.hpp"
#include "rsh/report.hpp"
#include "rsh/samples.hpp"
#include "rsh/version.hpp"

namespace rsh {

struct VerifyOptions {
    double s_min = -3.0;
    double s_max = 3.0;
    int n = 1001;

    // Mutation-testing hook, threaded through to make_rs_helix. 1.0 in any
    // real run; the suite must flag the curve when this is not 1.0.
    double kappa_scale = 1.0;
};

// Runs every closed-form invariant of a family member on one grid and
// reports each residual against its tolerance. All frame quantities come
// from the curve evaluator (not from the parameter formulas), so a bug or a
// deliberate mutation in the evaluator shows up as a failed check rather
// than silently cancelling.
inline VerificationReport run_family_verification(const FamilyParams& p,
                                                  const VerifyOptions& opt = {},
                                                  const Tolerances& tol = {}) {
    if (!(opt.s_min < opt.s_max)) throw invalid_params("verify: need s_min < s_max");
    if (opt.n < 7) throw invalid_params("verify: need n >= 7");

    const Interval dom{opt.s_min, opt.s_max};
    const AnalyticCurve curve = make_rs_helix(p, dom, opt.kappa_scale);
    const std::vector<double> grid = uniform_grid(dom, opt.n);
    const CurveSamples samples = sample_curve(curve, grid, /*with_frames=*/true, tol);

    VerificationReport rep;
    rep.provenance = {p, opt.s_min, opt.s_max, opt.n, "closed_form", kVersion};

    // Unit speed over the whole grid.
    double speed_dev = 0.0;
    for (double s : grid) speed_dev = std::max(speed_dev, std::fabs(speed(curve, s) - 1.0));
    rep.add("unit speed", speed_dev, tol.tol_speed);

    // tau/kappa is the line sg*(c1*s + c2), sg = sign(c1 cos theta).
    const double sg = p.normal_sign();
    const RectifyingFit fit = rectifying_fit(samples, tol);
    rep.add("tau/kappa line rms", fit.rms_residual, tol.tol_fit);
    rep.add("tau/kappa slope error", std::fabs(fit.c1_hat - sg * p.c1), tol.tol_param_recovery);
    rep.add("tau/kappa intercept error", std::fabs(fit.c2_hat - sg * p.c2),
            tol.tol_param_recovery);

    // sigma is constant and equals the closed-form value.
    const SlantVerdict slant = slant_verdict(samples, tol.tol_sigma);
    rep.add("sigma constancy", slant.sigma_max_dev, tol.tol_sigma);
    rep.add("sigma value error", std::fabs(slant.sigma_mean - p.sigma_constant()),
            tol.tol_sigma);

    // Every point sits on the cone.
    const ConeParams cone = cone_of(p);
    double cone_dev = 0.0;
    for (const Vec3& q : samples.p)
        cone_dev = std::max(cone_dev, std::fabs(cone_residual(cone, q)));
    rep.add("cone membership", cone_dev, tol.tol_cone);

    // Position vector stays in the rectifying plane.
    double leak = 0.0;
    for (size_t i = 0; i < samples.size(); ++i)
        leak = std::max(leak, std::fabs(dot(samples.p[i], samples.frames[i].n)));
    rep.add("rectifying position", leak, tol.tol_leak);

    // ODE for v = n'/kappa, both routes, on interior points (the stencil
    // route needs room for its nodes).
    const double pad = 0.01 * dom.length();
    const std::vector<double> interior = uniform_grid(opt.s_min + pad, opt.s_max - pad, 101);
    double ode_analytic = 0.0, ode_stencil = 0.0;
    for (double s : interior) {
        ode_analytic =
            std::max(ode_analytic, ode_residual(curve, p, s, OdeRoute::analytic, tol).residual_norm);
        ode_stencil =
            std::max(ode_stencil, ode_residual(curve, p, s, OdeRoute::stencil, tol).residual_norm);
    }
    rep.add("ode residual (analytic)", ode_analytic, tol.tol_ode_analytic);
    rep.add("ode residual (stencil)", ode_stencil, tol.tol_ode_stencil);

    // The fixed axis reconstructs from the frame, and its normal component
    // is the slant cosine (up to the branch sign).
    const Vec3 axis{0.0, 0.0, 1.0};
    const double lambda2_expect = p.normal_sign() * p.cos_theta;
    double axis_dev = 0.0, lambda2_dev = 0.0;
    const std::vector<double> axis_grid = uniform_grid(dom, 100);
    for (double s : axis_grid) {
        const AxisComponents lam = axis_components(p, s);
        const FrenetApparatus ap = frenet_at(curve, s, tol);
        const Vec3 rec = lam.lambda1 * ap.t + lam.lambda2 * ap.n + lam.lambda3 * ap.b;
        axis_dev = std::max(axis_dev, norm(rec - axis));
        lambda2_dev = std::max(lambda2_dev, std::fabs(dot(axis, ap.n) - lambda2_expect));
    }
    rep.add("axis reconstruction", axis_dev, tol.tol_axis);
    rep.add("axis normal component", lambda2_dev, tol.tol_axis_normal);

    // Normal indicatrix sits on a circle of latitude at the slant cosine.
    const SphericalTrace trace = indicatrix(curve, FrameVector::normal, tol);
    const LatitudeStats lat = latitude_check(trace, axis);
    rep.add("normal latitude deviation", lat.max_dev, tol.tol_latitude);
    rep.add("normal latitude value error", std::fabs(lat.mean_cos - lambda2_expect),
            tol.tol_latitude);

    return rep;
}

}  // namespace rsh
