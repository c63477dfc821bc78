#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "oracles.hpp"
#include "rsh/family.hpp"
#include "rsh/frenet.hpp"
#include "rsh/samples.hpp"
#include "rsh/stencil.hpp"

using rsh::AnalyticCurve;
using rsh::FrenetApparatus;
using rsh::Interval;
using rsh::Vec3;

TEST_CASE("circular helix has the textbook frame") {
    const double a = 2.0, b = 1.0;
    const double c = std::sqrt(a * a + b * b);
    const AnalyticCurve helix = oracle::circular_helix(a, b);

    for (double s : {-4.0, -1.0, 0.0, 2.5}) {
        const FrenetApparatus ap = rsh::frenet_at(helix, s);
        CHECK(ap.kappa == Catch::Approx(a / (c * c)).margin(1e-14));
        CHECK(ap.tau == Catch::Approx(b / (c * c)).margin(1e-14));
        // principal normal points inward, perpendicular to the axis
        CHECK(ap.n.z == Catch::Approx(0.0).margin(1e-14));
        // constant ratio means sigma vanishes identically
        CHECK(std::fabs(ap.sigma) < 1e-13);
        CHECK(rsh::tau_kappa_ratio(helix, s) == Catch::Approx(b / a).margin(1e-13));
        CHECK(std::fabs(rsh::kappa_prime(helix, s)) < 1e-13);
    }
}

TEST_CASE("frames are orthonormal and right-handed") {
    const auto p = rsh::FamilyParams::from_cos_theta(1.0, 0.0, 1.0 / 3.0);
    const AnalyticCurve cf = rsh::make_rs_helix(p, Interval{-3.0, 3.0});
    const AnalyticCurve fd = rsh::make_rs_helix_fd(p, Interval{-4.0, 4.0});

    auto check_frame = [](const FrenetApparatus& ap, double tol) {
        CHECK(std::fabs(rsh::norm(ap.t) - 1.0) < tol);
        CHECK(std::fabs(rsh::norm(ap.n) - 1.0) < tol);
        CHECK(std::fabs(rsh::norm(ap.b) - 1.0) < tol);
        CHECK(std::fabs(rsh::dot(ap.t, ap.n)) < tol);
        CHECK(std::fabs(rsh::dot(ap.n, ap.b)) < tol);
        CHECK(std::fabs(rsh::dot(ap.b, ap.t)) < tol);
        CHECK(rsh::triple(ap.t, ap.n, ap.b) == Catch::Approx(1.0).margin(3 * tol));
    };
    for (double s : {-2.7, -1.0, 0.0, 0.4, 2.9}) {
        check_frame(rsh::frenet_at(cf, s), 1e-8);
        check_frame(rsh::frenet_at(fd, s), 1e-5);
    }
}

TEST_CASE("frame derivatives satisfy the Frenet equations") {
    // Differentiate the (exact) frame fields with the library stencil and
    // compare against kappa/tau from the same points.
    const auto p = rsh::FamilyParams::from_cos_theta(0.8, -0.3, 0.45);
    const AnalyticCurve curve = rsh::make_rs_helix(p, Interval{-5.0, 5.0});

    for (double s : {-2.0, -0.5, 1.0, 3.0}) {
        const FrenetApparatus ap = rsh::frenet_at(curve, s);
        const double h = 1e-4 * (1.0 + std::fabs(s));
        auto t_of = [&](double x) { return rsh::frenet_at(curve, x).t; };
        auto n_of = [&](double x) { return rsh::frenet_at(curve, x).n; };
        auto b_of = [&](double x) { return rsh::frenet_at(curve, x).b; };
        const Vec3 tp = rsh::finite_difference(t_of, s, 1, h);
        const Vec3 np = rsh::finite_difference(n_of, s, 1, h);
        const Vec3 bp = rsh::finite_difference(b_of, s, 1, h);
        CHECK(rsh::norm(tp - ap.kappa * ap.n) < 1e-5);
        CHECK(rsh::norm(np - (-ap.kappa * ap.t + ap.tau * ap.b)) < 1e-5);
        CHECK(rsh::norm(bp - (-ap.tau * ap.n)) < 1e-5);
    }
}

TEST_CASE("finite-difference frame matches an independent oracle") {
    // Twisted cubic: kappa and tau computed from the chart formulas in the
    // natural parameter, positions supplied in arc length only.
    const AnalyticCurve tc = oracle::twisted_cubic_unit_speed();
    for (double s : {-1.5, -0.6, 0.2, 0.9, 1.7}) {
        const FrenetApparatus ap = rsh::frenet_at(tc, s);
        double kappa_ref, tau_ref;
        oracle::tc_kappa_tau(s, kappa_ref, tau_ref);
        CHECK(ap.kappa == Catch::Approx(kappa_ref).epsilon(1e-6).margin(1e-8));
        CHECK(ap.tau == Catch::Approx(tau_ref).epsilon(1e-5).margin(1e-7));
    }
}

TEST_CASE("vanishing curvature is reported, not regularized") {
    auto line_eval = [](double s, int order) -> Vec3 {
        if (order == 0) return {s, 0.0, 0.0};
        if (order == 1) return {1.0, 0.0, 0.0};
        return {0.0, 0.0, 0.0};
    };
    const AnalyticCurve line = AnalyticCurve::closed_form(Interval{-1.0, 1.0}, line_eval);
    CHECK_THROWS_AS(rsh::frenet_at(line, 0.0), rsh::curvature_vanishes);
    CHECK_THROWS_AS(rsh::tau_kappa_ratio(line, 0.0), rsh::curvature_vanishes);
    CHECK_THROWS_AS(rsh::kappa_prime(line, 0.0), rsh::curvature_vanishes);
}

TEST_CASE("sigma from the finite-difference backend stays near the constant") {
    const auto p = rsh::FamilyParams::from_cos_theta(1.0, 0.0, 1.0 / 3.0);
    const AnalyticCurve fd = rsh::make_rs_helix_fd(p, Interval{-4.0, 4.0});
    for (double s : {-2.0, 0.0, 1.5}) {
        const FrenetApparatus ap = rsh::frenet_at(fd, s);
        CHECK(ap.sigma == Catch::Approx(p.sigma_constant()).margin(1e-4));
    }
}
