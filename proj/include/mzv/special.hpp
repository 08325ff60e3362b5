#pragma once

#include <complex>

namespace mzv {

/// Complex Gamma by the Lanczos approximation (g = 7, 9 terms) with the
/// reflection formula for Re z < 1/2. Relative error below 1e-13 away from
/// the poles. Throws PoleError at nonpositive integers.
std::complex<double> complex_gamma(std::complex<double> z);

} // namespace mzv
