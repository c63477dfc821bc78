#pragma once

#include <stdexcept>
#include <string>

namespace rsh {

// All library errors derive from this so callers can catch one base type.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parameter sets that violate a constructor precondition (c1 = 0, cos(theta)
// outside (0,1) in magnitude, empty domain, non-finite input, ...).
struct invalid_params : error {
    using error::error;
};

// Evaluation point outside the curve's domain.
struct out_of_domain : error {
    using error::error;
};

// A difference stencil would need points outside the domain (or off the
// sample grid) and cannot shrink further.
struct stencil_out_of_domain : error {
    using error::error;
};

// norm(alpha'') below the curvature floor: the Frenet frame is undefined.
struct curvature_vanishes : error {
    using error::error;
};

// Fewer usable samples than an estimator needs.
struct insufficient_samples : error {
    using error::error;
};

// Spherical trace with no points.
struct empty_trace : error {
    using error::error;
};

}  // namespace rsh
