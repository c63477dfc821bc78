#pragma once

#include "rsh/errors.hpp"

namespace rsh {

// Every default tolerance and numeric floor used by the analysis code, in one
// record. Callers that need looser checks (noisy input) scale the whole set
// rather than tweaking individual numbers.
struct Tolerances {
    // Points with curvature at or below this floor are excluded from frame
    // construction and from classification fits rather than regularized.
    double eps_kappa = 1e-9;

    // Base scale for finite-difference steps: h = fd_step_scale * (1 + |s|).
    double fd_step_scale = 1e-4;

    // Acceptable |speed - 1| for a curve that claims unit-speed sampling.
    double tol_speed = 1e-6;

    // RMS threshold for the tau/kappa straight-line fit.
    double tol_fit = 1e-6;

    // Minimum |slope| for a fit to count as rectifying (flat lines are
    // ordinary helices, not rectifying curves).
    double eps_slope = 1e-8;

    // Max deviation of sigma from its mean: exact-derivative input.
    double tol_sigma = 1e-6;

    // Same check against sampled/finite-difference input.
    double tol_sigma_sampled = 1e-4;

    // Max |dot(alpha, n)| for the position vector to count as lying in the
    // rectifying plane; exact and sampled flavors like sigma.
    double tol_leak = 1e-6;
    double tol_leak_sampled = 1e-4;

    // Verification-suite thresholds. Cone membership and the axis normal
    // component are algebraic identities of the construction, so they get
    // the tightest budgets; the stencil ODE route carries the roundoff of a
    // second-derivative stencil and sits three decades higher than the
    // analytic route.
    double tol_cone = 1e-10;
    double tol_ode_analytic = 1e-9;
    double tol_ode_stencil = 1e-6;
    double tol_axis = 1e-8;
    double tol_axis_normal = 1e-10;
    double tol_latitude = 1e-9;
    double tol_param_recovery = 1e-6;

    // Returns a copy with every tolerance multiplied by k. Floors (eps_kappa)
    // and the step scale are left alone: scaling loosens acceptance checks,
    // it does not change how derivatives are computed.
    Tolerances scaled(double k) const {
        if (!(k > 0.0)) throw invalid_params("tolerance scale must be positive");
        Tolerances t = *this;
        t.tol_speed *= k;
        t.tol_fit *= k;
        t.tol_sigma *= k;
        t.tol_sigma_sampled *= k;
        t.tol_leak *= k;
        t.tol_leak_sampled *= k;
        t.tol_cone *= k;
        t.tol_ode_analytic *= k;
        t.tol_ode_stencil *= k;
        t.tol_axis *= k;
        t.tol_axis_normal *= k;
        t.tol_latitude *= k;
        t.tol_param_recovery *= k;
        return t;
    }
};

}  // namespace rsh
