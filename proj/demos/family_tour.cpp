// Walks one family member end to end: build the curve, look at its frame,
// classify it, and run the invariant suite. Build and run:
//   cmake --build build --target demo_family_tour && ./build/demos/demo_family_tour

#include <iomanip>
#include <iostream>

#include "rsh/rsh.hpp"

int main() {
    using namespace rsh;
    std::cout << std::setprecision(12);

    // tau/kappa = s, slant angle with cos(theta) = 1/3.
    const FamilyParams p = FamilyParams::from_cos_theta(1.0, 0.0, 1.0 / 3.0);
    const AnalyticCurve curve = make_rs_helix(p, Interval{-3.0, 3.0});

    std::cout << "member: c1=" << p.c1 << " c2=" << p.c2 << " cos_theta=" << p.cos_theta
              << "\n";
    std::cout << "expected sigma (= cot theta): " << p.sigma_constant() << "\n\n";

    for (double s : {-2.0, 0.0, 2.0}) {
        const FrenetApparatus ap = frenet_at(curve, s);
        const Vec3 pos = curve.evaluate(s, 0);
        std::cout << "s=" << s << "  |alpha|=" << norm(pos) << "  kappa=" << ap.kappa
                  << "  tau=" << ap.tau << "  sigma=" << ap.sigma << "\n";
    }

    const CurveSamples samples =
        sample_curve(curve, uniform_grid(curve.domain(), 401), /*with_frames=*/true);
    const ClassificationReport rep = classify_full(samples);
    std::cout << "\nfit: tau/kappa = " << rep.fit.c1_hat << " * s + " << rep.fit.c2_hat
              << "  (rms " << rep.fit.rms_residual << ")\n";
    std::cout << "slant: sigma_mean=" << rep.slant.sigma_mean
              << " max_dev=" << rep.slant.sigma_max_dev << "\n";
    std::cout << "normal leak max: " << rep.normal_leak_max << "\n";
    std::cout << "rectifying slant helix: " << (rep.is_rectifying_slant_helix ? "yes" : "no")
              << "\n\n";

    const VerificationReport vrep = run_family_verification(p);
    for (const auto& e : vrep.entries)
        std::cout << (e.pass ? "  pass  " : "  FAIL  ") << e.name << "  (" << e.residual
                  << " vs " << e.tolerance << ")\n";
    std::cout << "overall: " << (vrep.overall() ? "pass" : "FAIL") << "\n";
    return vrep.overall() ? 0 : 1;
}
