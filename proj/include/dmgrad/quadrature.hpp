#pragma once

#include <functional>
#include <stdexcept>

namespace dmgrad {

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct QuadResult {
    double value = 0.0;
    double abs_scale = 0.0;  // integral of |f|, sets the rounding floor
    int panels = 0;
};

// Composite 16-point Gauss-Legendre quadrature for smooth oscillatory
// integrands. The panel count starts at >= 8 panels per period of the hint
// frequency and doubles until two refinements agree to
// rel_tol * max(|I|, abs_scale). Throws QuadratureError if the budget is
// exhausted before convergence.
QuadResult integrate_oscillatory(const std::function<double(double)>& f, double a,
                                 double b, double omega_hint, double rel_tol,
                                 int max_doublings = 12);

}  // namespace dmgrad
