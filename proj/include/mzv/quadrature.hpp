#pragma once

// Thin wrappers over the Boost double-exponential quadratures.

#include <functional>

namespace mzv {

struct QuadResult {
    double value = 0.0;
    double err = 0.0; ///< difference between the last two refinement levels
};

/// Integral over [a, b]. f receives x together with its distance to the
/// nearer endpoint (negative near a, positive near b), which stays accurate
/// where b - x underflows. Tolerates integrable endpoint singularities.
QuadResult integrate(const std::function<double(double, double)>& f, double a, double b, double tol);
QuadResult integrate(const std::function<double(double)>& f, double a, double b, double tol);

/// Integral over [a, inf) for a rapidly decaying f.
QuadResult integrate_to_infinity(const std::function<double(double)>& f, double a, double tol);

/// Gauss-Kronrod 61-point rule on a finite interval for smooth f.
QuadResult integrate_smooth(const std::function<double(double)>& f, double a, double b, double tol);

} // namespace mzv
