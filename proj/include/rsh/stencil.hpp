#pragma once

#include <array>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <type_traits>
#include <utility>

#include "rsh/errors.hpp"
#include "rsh/vec3.hpp"

namespace rsh {

// Central-difference kernels over a uniform stencil. Orders 1-2 use the
// classic 5-point weights; orders 3-4 use 7-point weights so that every
// kernel is fourth-order accurate. (The wider kernels matter: with the
// 5-point O(h^2) third-derivative stencil there is no step at which torsion
// comes out to ~1e-5 near the flat ends of the example curves; roundoff and
// truncation cross above that level.)
namespace stencil_detail {

struct Kernel {
    int half_width;                  // nodes at -half_width..+half_width
    std::array<double, 7> weights;   // unused tail entries are zero
    int order;                       // derivative order (divides by h^order)
};

inline const Kernel& kernel_for(int order) {
    static const Kernel k1{2, {1.0 / 12, -8.0 / 12, 0.0, 8.0 / 12, -1.0 / 12, 0, 0}, 1};
    static const Kernel k2{2, {-1.0 / 12, 16.0 / 12, -30.0 / 12, 16.0 / 12, -1.0 / 12, 0, 0}, 2};
    static const Kernel k3{3, {1.0 / 8, -1.0, 13.0 / 8, 0.0, -13.0 / 8, 1.0, -1.0 / 8}, 3};
    static const Kernel k4{3, {-1.0 / 6, 2.0, -13.0 / 2, 28.0 / 3, -13.0 / 2, 2.0, -1.0 / 6}, 4};
    switch (order) {
        case 1: return k1;
        case 2: return k2;
        case 3: return k3;
        case 4: return k4;
        default: throw invalid_params("finite_difference: order must be 1..4");
    }
}

}  // namespace stencil_detail

// Order-k derivative estimate of fn at s with the fixed step given. V is any
// vector-space-ish value (double or Vec3). Truncation error is O(step^4) for
// all four orders; rounding error grows like eps/step^order, so callers pick
// the step to balance the two.
template <typename F>
auto finite_difference(F&& fn, double s, int order, double step)
    -> decltype(fn(s) * 1.0) {
    if (!(step > 0.0) || !std::isfinite(step))
        throw invalid_params("finite_difference: step must be positive and finite");
    const auto& k = stencil_detail::kernel_for(order);
    using V = decltype(fn(s) * 1.0);
    V acc = fn(s + -k.half_width * step) * k.weights[0];
    for (int i = 1; i <= 2 * k.half_width; ++i)
        acc += fn(s + (i - k.half_width) * step) * k.weights[static_cast<size_t>(i)];
    double scale = 1.0;
    for (int i = 0; i < order; ++i) scale *= step;
    return acc * (1.0 / scale);
}

namespace stencil_detail {

template <typename V>
double value_norm(const V& v) {
    if constexpr (std::is_arithmetic_v<V>) {
        return std::fabs(v);
    } else {
        return norm(v);
    }
}

}  // namespace stencil_detail

// Derivative estimate with an automatic step: runs the kernel at steps
// base_step * 2^j for j in [j_lo, j_hi], keeps the adjacent pair whose
// estimates agree best, and returns their Richardson combination
// (16*fine - coarse)/15, which cancels the shared O(h^4) term. Steps whose
// stencil would leave [s_lo, s_hi] are skipped; if none fit, throws.
//
// This adapts to the local derivative scale without per-curve tuning: tight
// steps win where high derivatives are large (fast-winding curves), wide
// steps win where roundoff dominates (nearly straight stretches).
template <typename F>
auto laddered_derivative(F&& fn, double s, int order, double base_step, int j_lo = -2,
                         int j_hi = 7, double s_lo = -std::numeric_limits<double>::infinity(),
                         double s_hi = std::numeric_limits<double>::infinity())
    -> decltype(fn(s) * 1.0) {
    using V = decltype(fn(s) * 1.0);
    const int half = stencil_detail::kernel_for(order).half_width;

    bool have_prev = false, have_best = false;
    V prev{}, best{};
    double prev_step = 0.0;
    double best_score = std::numeric_limits<double>::infinity();

    for (int j = j_lo; j <= j_hi; ++j) {
        const double h = base_step * std::ldexp(1.0, j);
        if (s - half * h < s_lo || s + half * h > s_hi) break;  // ladder only grows
        V est;
        try {
            est = finite_difference(fn, s, order, h);
        } catch (const stencil_out_of_domain&) {
            break;  // fn itself differentiates and ran out of room at a node
        }
        if (have_prev) {
            // prev used step h/2: Richardson with the fourth-order kernels.
            const double score = stencil_detail::value_norm(est - prev);
            if (score < best_score) {
                best_score = score;
                best = (prev * 16.0 - est) * (1.0 / 15.0);
                have_best = true;
            }
        }
        prev = est;
        prev_step = h;
        have_prev = true;
    }
    (void)prev_step;
    if (have_best) return best;
    if (have_prev) return prev;  // only one step fit; no agreement data
    throw stencil_out_of_domain("laddered_derivative: no stencil step fits the domain");
}

}  // namespace rsh
