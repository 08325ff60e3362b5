#pragma once

// The solutions G0, G1 of the formal KZ equation as truncated series, the
// Drinfeld associator phi = sum_W zeta-hat(reg w) W, and residual checks of
// the relations among them. Every check returns the max coefficient-wise
// absolute residual.

#include <functional>

#include "mzv/mzv.hpp"
#include "mzv/ncseries.hpp"

namespace mzv {

enum class BranchSign : int { plus = 1, minus = -1 };

/// sum_W Li(w; z) W.
TruncSeries g0(Complex z, int order, const EvalConfig& cfg = {});
/// sum_W Li(reg w; z) W.
TruncSeries g0_bar(Complex z, int order, const EvalConfig& cfg = {});
/// sum_W Li((1-z)^*(w); 1 - z) W.
TruncSeries g1(Complex z, int order, const EvalConfig& cfg = {});
TruncSeries phi(int order, MzvEvaluator& mzv);
TruncSeries phi(int order, const EvalConfig& cfg = {});

/// A coefficient function l(w; z), extended linearly to polynomials.
using CoefficientFn = std::function<Complex(const NCPoly&, Complex)>;

CoefficientFn li_coefficients(const EvalConfig& cfg = {});
/// pi(f) l : (w; z) -> l(f^*(w); f^{-1}(z)).
CoefficientFn pi_action(Mobius f, CoefficientFn l);
TruncSeries series_of(const CoefficientFn& l, Complex z, int order);

/// G0 = (1-z)^{-Y} G0bar z^X.
double check_goreg(Complex z, int order, const EvalConfig& cfg = {});
/// G1(z)^{-1} G0(z) = phi, for real 0 < z < 1.
double check_c10(double z, int order, const EvalConfig& cfg = {});

struct DualityResidual {
    double series = 0.0; ///< phi(X, Y) phi(-Y, -X) - 1
    double words = 0.0;  ///< zeta-hat(reg w) - zeta-hat(reg tau w) over all words
};
DualityResidual check_duality(int order, const EvalConfig& cfg = {});

/// Li((z/(z-1))^*(w); z/(z-1)) = Li(w; z) over nonempty words of hy.
double check_landen_words(double z, int order, const EvalConfig& cfg = {});
/// sum_{w1 w2 = w} Li(tau(w1); 1 - z) Li(w2; z) = zeta-hat(reg w) over all words.
double check_euler_words(double z, int order, const EvalConfig& cfg = {});
/// exp(s X pi i) = phi(-X+Y, -X) exp(-s(-X+Y) pi i) phi(-X+Y, Y)^{-1} exp(s Y pi i) phi(X, Y).
double check_hexagon(int order, BranchSign sign, const EvalConfig& cfg = {});

} // namespace mzv
