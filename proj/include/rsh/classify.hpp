#pragma once

#include <cmath>
#include <cstddef>
#include <optional>

#include "rsh/family.hpp"
#include "rsh/report.hpp"
#include "rsh/samples.hpp"

namespace rsh {

// Least-squares line through (s, tau/kappa). A rectifying curve has
// tau/kappa = c1*s + c2 with nonzero slope, so the verdict needs both a
// small residual and a slope clear of zero (otherwise ordinary helices,
// whose ratio is constant, would qualify).
struct RectifyingFit {
    double c1_hat = 0.0;
    double c2_hat = 0.0;
    double rms_residual = 0.0;
    bool is_rectifying = false;
};

struct SlantVerdict {
    double sigma_mean = 0.0;
    double sigma_max_dev = 0.0;
    bool is_slant = false;
    std::optional<double> implied_theta;  // arccot(sigma_mean), only when is_slant
};

// Position vector resolved in the local frame: alpha = lambda*t + mu*b +
// normal_leak*n. A rectifying curve keeps normal_leak at zero.
struct RectifyingDecomposition {
    double lambda = 0.0;
    double mu = 0.0;
    double normal_leak = 0.0;
};

// Residual of v'' + (c1 tan(theta))^2/(1+f^2)^2 * v = 0 for v = n'/kappa.
struct OdeCheck {
    Vec3 v;
    Vec3 residual;
    double residual_norm = 0.0;
};

inline RectifyingFit rectifying_fit(const CurveSamples& samples, const Tolerances& tol = {}) {
    if (!samples.has_frames())
        throw invalid_params("rectifying_fit: samples carry no frames");
    double s_sum = 0.0, r_sum = 0.0;
    size_t n = 0;
    for (size_t i = 0; i < samples.size(); ++i) {
        if (!(samples.frames[i].kappa > tol.eps_kappa)) continue;
        s_sum += samples.s[i];
        r_sum += samples.frames[i].tau / samples.frames[i].kappa;
        ++n;
    }
    if (n < 3) throw insufficient_samples("rectifying_fit: need at least 3 usable samples");
    const double s_mean = s_sum / static_cast<double>(n);
    const double r_mean = r_sum / static_cast<double>(n);

    double sxx = 0.0, sxr = 0.0;
    for (size_t i = 0; i < samples.size(); ++i) {
        if (!(samples.frames[i].kappa > tol.eps_kappa)) continue;
        const double ds = samples.s[i] - s_mean;
        const double r = samples.frames[i].tau / samples.frames[i].kappa;
        sxx += ds * ds;
        sxr += ds * (r - r_mean);
    }
    if (!(sxx > 0.0)) throw insufficient_samples("rectifying_fit: degenerate s grid");

    RectifyingFit fit;
    fit.c1_hat = sxr / sxx;
    fit.c2_hat = r_mean - fit.c1_hat * s_mean;
    double sq = 0.0;
    for (size_t i = 0; i < samples.size(); ++i) {
        if (!(samples.frames[i].kappa > tol.eps_kappa)) continue;
        const double r = samples.frames[i].tau / samples.frames[i].kappa;
        const double resid = r - (fit.c1_hat * samples.s[i] + fit.c2_hat);
        sq += resid * resid;
    }
    fit.rms_residual = std::sqrt(sq / static_cast<double>(n));
    fit.is_rectifying = fit.rms_residual <= tol.tol_fit && std::fabs(fit.c1_hat) > tol.eps_slope;
    return fit;
}

// Constancy of sigma judged by max deviation from the mean, which is the
// directly assertable form of "sigma is constant". tol_sigma is passed as a
// value so callers can pick the closed-form or the sampled-input threshold.
inline SlantVerdict slant_verdict(const CurveSamples& samples, double tol_sigma) {
    if (!samples.has_frames())
        throw invalid_params("slant_verdict: samples carry no frames");
    if (samples.size() < 3) throw insufficient_samples("slant_verdict: need at least 3 samples");
    double sum = 0.0;
    for (const auto& ap : samples.frames) sum += ap.sigma;
    SlantVerdict out;
    out.sigma_mean = sum / static_cast<double>(samples.size());
    for (const auto& ap : samples.frames)
        out.sigma_max_dev = std::max(out.sigma_max_dev, std::fabs(ap.sigma - out.sigma_mean));
    out.is_slant = out.sigma_max_dev <= tol_sigma;
    if (out.is_slant) out.implied_theta = std::atan2(1.0, out.sigma_mean);
    return out;
}

inline SlantVerdict slant_verdict(const CurveSamples& samples, const Tolerances& tol = {}) {
    return slant_verdict(samples, tol.tol_sigma);
}

inline RectifyingDecomposition rectifying_decomposition(const AnalyticCurve& curve, double s,
                                                        const Tolerances& tol = {}) {
    const FrenetApparatus ap = frenet_at(curve, s, tol);
    const Vec3 alpha = curve.evaluate(s, 0);
    return {dot(alpha, ap.t), dot(alpha, ap.b), dot(alpha, ap.n)};
}

inline RectifyingDecomposition rectifying_decomposition(const Vec3& position,
                                                        const FrenetApparatus& ap) {
    return {dot(position, ap.t), dot(position, ap.b), dot(position, ap.n)};
}

enum class OdeRoute { analytic, stencil };

// Residual of the second-order equation satisfied by v = n'/kappa on family
// members. The frame (and with it v) always comes from the curve; the route
// only decides where v'' comes from:
//   analytic  - closed-form expansion of v'' in the frame at s, with the
//               coefficient functions evaluated from params. The coefficients
//               are evaluated numerically rather than cancelled on paper, so
//               a curve that does not match params shows up as a residual.
//   stencil   - five-point second-derivative stencil on v at step
//               fd_step_scale*(1+|s|), no params-side derivatives involved.
inline OdeCheck ode_residual(const AnalyticCurve& curve, const FamilyParams& params, double s,
                             OdeRoute route, const Tolerances& tol = {}) {
    const double f = params.f(s);
    const double u = 1.0 + f * f;
    const double c1_tan = params.c1 * params.tan_theta;
    const double omega_sq = c1_tan * c1_tan / (u * u);

    // v at one parameter value, assembled in long double without square
    // roots: with t = alpha' and unit speed, tau/kappa = det/|alpha''|^4 and
    // (tau/kappa) b = det/|alpha''|^4 (alpha' x alpha''), so
    //   v = -alpha' + det(alpha',alpha'',alpha''')/|alpha''|^4 (alpha' x alpha'').
    // The stencil below divides by h^2 ~ 1e-8; keeping the nodes in long
    // double keeps that amplified rounding out of the residual.
    auto v_node = [&](double x) -> family_detail::LVec3 {
        const Vec3 d1 = curve.evaluate(x, 1);
        const Vec3 d2 = curve.evaluate(x, 2);
        const Vec3 d3 = curve.evaluate(x, 3);
        const family_detail::LVec3 l1{d1.x, d1.y, d1.z};
        const family_detail::LVec3 l2{d2.x, d2.y, d2.z};
        const family_detail::LVec3 l3{d3.x, d3.y, d3.z};
        const long double k2 = l2.x * l2.x + l2.y * l2.y + l2.z * l2.z;
        const long double floor = static_cast<long double>(tol.eps_kappa) * tol.eps_kappa;
        if (!(k2 > floor)) throw curvature_vanishes("ode_residual: curvature at floor");
        const family_detail::LVec3 c12 = family_detail::cross(l1, l2);
        const long double det = c12.x * l3.x + c12.y * l3.y + c12.z * l3.z;
        return l1 * -1.0L + c12 * (det / (k2 * k2));
    };

    OdeCheck out;
    Vec3 vpp;
    if (route == OdeRoute::analytic) {
        const FrenetApparatus ap = frenet_at(curve, s, tol);
        out.v = -ap.t + (ap.tau / ap.kappa) * ap.b;
        const auto e = family_detail::eval_at(params, s);
        const double kap = static_cast<double>(e.kappa);
        const double kap_p = static_cast<double>(e.kappa_p);
        const double ta = static_cast<double>(e.tau);
        vpp = ap.t * (kap * kap * u) -
              ap.n * (kap_p * u + 2.0 * params.c1 * kap * f +
                      params.normal_sign() * params.c1 * ta) -
              ap.b * (kap * ta * u);
    } else {
        const double h = tol.fd_step_scale * (1.0 + std::fabs(s));
        const Interval dom = curve.domain();
        if (s - 2.0 * h < dom.lo || s + 2.0 * h > dom.hi)
            throw stencil_out_of_domain("ode_residual: stencil leaves the curve domain");
        const family_detail::LVec3 v0 = v_node(s);
        const family_detail::LVec3 sum = v_node(s - 2.0 * h) * -1.0L + v_node(s - h) * 16.0L +
                                         v0 * -30.0L + v_node(s + h) * 16.0L +
                                         v_node(s + 2.0 * h) * -1.0L;
        const long double hh = static_cast<long double>(h) * static_cast<long double>(h);
        out.v = v0.narrow();
        vpp = (sum * (1.0L / (12.0L * hh))).narrow();
    }
    out.residual = vpp + omega_sq * out.v;
    out.residual_norm = norm(out.residual);
    return out;
}

inline OdeCheck ode_residual(const AnalyticCurve& curve, const FamilyParams& params, double s,
                             const Tolerances& tol = {}) {
    const OdeRoute route = curve.backend() == Backend::closed_form ? OdeRoute::analytic
                                                                   : OdeRoute::stencil;
    return ode_residual(curve, params, s, route, tol);
}

// Aggregate verdict. "Rectifying" appears twice on purpose: the fit tests
// the tau/kappa line (which survives translation), the leak tests the
// position vector itself (which does not); the combined verdict demands
// both, and the report keeps the two residuals separate.
struct ClassificationReport {
    RectifyingFit fit;
    SlantVerdict slant;
    double normal_leak_max = 0.0;
    bool position_rectifying = false;
    bool is_rectifying_slant_helix = false;
    VerificationReport checks;
};

inline ClassificationReport classify_full(const CurveSamples& samples, const Tolerances& tol = {},
                                          bool sampled_input = false) {
    if (!samples.has_frames())
        throw invalid_params("classify_full: samples carry no frames");
    const double tol_sigma = sampled_input ? tol.tol_sigma_sampled : tol.tol_sigma;
    const double tol_leak = sampled_input ? tol.tol_leak_sampled : tol.tol_leak;

    ClassificationReport rep;
    rep.fit = rectifying_fit(samples, tol);
    rep.slant = slant_verdict(samples, tol_sigma);
    for (size_t i = 0; i < samples.size(); ++i) {
        const auto d = rectifying_decomposition(samples.p[i], samples.frames[i]);
        rep.normal_leak_max = std::max(rep.normal_leak_max, std::fabs(d.normal_leak));
    }
    rep.position_rectifying = rep.normal_leak_max <= tol_leak;
    rep.is_rectifying_slant_helix =
        rep.fit.is_rectifying && rep.slant.is_slant && rep.position_rectifying;

    rep.checks.add("tau/kappa line rms", rep.fit.rms_residual, tol.tol_fit);
    rep.checks.add("sigma constancy", rep.slant.sigma_max_dev, tol_sigma);
    rep.checks.add("rectifying position", rep.normal_leak_max, tol_leak);
    return rep;
}

}  // namespace rsh
