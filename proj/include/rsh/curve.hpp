#pragma once

#include <cmath>
#include <functional>
#include <utility>

#include "rsh/errors.hpp"
#include "rsh/stencil.hpp"
#include "rsh/vec3.hpp"

namespace rsh {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    Interval() = default;
    Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
        if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
            throw invalid_params("Interval: need finite lo < hi");
    }

    bool contains(double s) const { return s >= lo && s <= hi; }
    double length() const { return hi - lo; }
};

enum class Backend { closed_form, finite_difference };

// A unit-speed curve alpha: domain -> R^3 whose derivatives up to order 4 can
// be queried. Closed-form curves supply every order analytically; the
// finite-difference flavor wraps a position-only function and synthesizes
// orders 1-4 with central stencils. Evaluation is pure: same (s, order) in,
// bit-identical Vec3 out, so grids can be evaluated in parallel by the
// caller if desired.
class AnalyticCurve {
  public:
    using Evaluator = std::function<Vec3(double s, int order)>;
    using PositionFn = std::function<Vec3(double s)>;

    static AnalyticCurve closed_form(Interval domain, Evaluator eval) {
        AnalyticCurve c;
        c.domain_ = domain;
        c.backend_ = Backend::closed_form;
        c.eval_ = std::move(eval);
        return c;
    }

    // step_scale is the base of the stencil step h = step_scale * (1 + |s|)
    // used verbatim for orders 1-2; orders 3-4 run a step ladder upward from
    // that base because no fixed step serves both fast-winding and nearly
    // straight stretches.
    static AnalyticCurve finite_difference(Interval domain, PositionFn position,
                                           double step_scale = 1e-4) {
        if (!(step_scale > 0.0)) throw invalid_params("step_scale must be positive");
        AnalyticCurve c;
        c.domain_ = domain;
        c.backend_ = Backend::finite_difference;
        auto pos = std::move(position);
        c.eval_ = [pos, domain, step_scale](double s, int order) -> Vec3 {
            if (order == 0) return pos(s);
            const double h = step_scale * (1.0 + std::fabs(s));
            if (order <= 2) {
                if (s - 2 * h < domain.lo || s + 2 * h > domain.hi)
                    throw stencil_out_of_domain("stencil exits curve domain");
                return ::rsh::finite_difference(pos, s, order, h);
            }
            return ::rsh::laddered_derivative(pos, s, order, 64.0 * h, -6, 6, domain.lo,
                                              domain.hi);
        };
        return c;
    }

    Vec3 evaluate(double s, int order) const {
        if (!domain_.contains(s)) throw out_of_domain("curve evaluated outside its domain");
        if (order < 0 || order > 4) throw invalid_params("derivative order must be 0..4");
        return eval_(s, order);
    }

    Backend backend() const { return backend_; }
    const Interval& domain() const { return domain_; }

  private:
    AnalyticCurve() = default;

    Interval domain_{0.0, 1.0};
    Backend backend_ = Backend::closed_form;
    Evaluator eval_;
};

inline double speed(const AnalyticCurve& curve, double s) { return norm(curve.evaluate(s, 1)); }

}  // namespace rsh
