#include "mzv/special.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "mzv/errors.hpp"

namespace mzv {

namespace {

constexpr double lanczos_g = 7.0;
constexpr double lanczos_p[] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                                771.32342877765313,   -176.61502916214059,   12.507343278686905,
                                -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

} // namespace

std::complex<double> complex_gamma(std::complex<double> z) {
    using C = std::complex<double>;
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real()))
        throw PoleError(fmt::format("Gamma has a pole at {}", z.real()));
    const double pi = std::numbers::pi;
    if (z.real() < 0.5) return pi / (std::sin(pi * z) * complex_gamma(1.0 - z));
    z -= 1.0;
    C x = lanczos_p[0];
    for (int i = 1; i < 9; ++i) x += lanczos_p[i] / (z + static_cast<double>(i));
    const C t = z + lanczos_g + 0.5;
    return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

} // namespace mzv
