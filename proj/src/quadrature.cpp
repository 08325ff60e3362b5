#include "mzv/quadrature.hpp"

#include <cmath>
#include <limits>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <fmt/format.h>

#include "mzv/errors.hpp"

namespace mzv {

namespace {

QuadResult checked(double value, double err, const char* what) {
    if (!std::isfinite(value) || !std::isfinite(err))
        throw Unconverged(fmt::format("{} quadrature produced a non-finite result", what));
    return {value, err};
}

} // namespace

QuadResult integrate(const std::function<double(double, double)>& f, double a, double b, double tol) {
    thread_local boost::math::quadrature::tanh_sinh<double> rule(15);
    double err = 0.0;
    const double v = rule.integrate([&](double x, double xc) { return f(x, xc); }, a, b, tol, &err);
    return checked(v, err, "tanh-sinh");
}

QuadResult integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    return integrate([&](double x, double) { return f(x); }, a, b, tol);
}

QuadResult integrate_to_infinity(const std::function<double(double)>& f, double a, double tol) {
    thread_local boost::math::quadrature::exp_sinh<double> rule(9);
    double err = 0.0;
    const double v = rule.integrate(f, a, std::numeric_limits<double>::infinity(), tol, &err);
    return checked(v, err, "exp-sinh");
}

QuadResult integrate_smooth(const std::function<double(double)>& f, double a, double b, double tol) {
    double err = 0.0;
    const double v = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 4, tol, &err);
    return checked(v, err, "Gauss-Kronrod");
}

} // namespace mzv
