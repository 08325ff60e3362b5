#pragma once

// Hurwitz zeta by second-order Euler-Maclaurin, the periodic polylogarithm
// L(s, z) = sum_n e^{2 pi i n z} / n^s, Kummer's confluent hypergeometric
// functions F and U, and the checks tying them together.

#include <vector>

#include "mzv/polylog.hpp"

namespace mzv {

/// Bernoulli polynomials B_0..B_8 with exact rational coefficients.
class BernoulliTable {
public:
    static constexpr int max_degree = 8;
    static const BernoulliTable& instance();

    /// Coefficients of B_n in ascending powers of t.
    const std::vector<Rational>& coefficients(int n) const { return polys_.at(n); }
    Rational number(int n) const { return polys_.at(n).front(); }
    double eval(int n, double t) const;
    /// B_n(t - floor(t)).
    double periodic(int n, double t) const;

    /// sum_n B_n(t) u^n / n! = u e^{tu} / (e^u - 1), compared exactly as
    /// polynomials in t through order u^8.
    bool generating_identity_holds() const;

private:
    BernoulliTable();
    std::vector<std::vector<Rational>> polys_;
};

/// (1/pi^2) sum_{n=1}^{terms} cos(2 pi n t) / n^2.
double b2_fourier(double t, int terms);

/// zeta(s, z) = z^{1-s}/(s-1) + z^{-s}/2 + s z^{-s-1}/12
///              - int_0^inf (B2bar(t)/2) d^2/dt^2 (z+t)^{-s} dt.
/// Needs z > 0 and Re s > -2. Throws PoleError at s = 1 and StripExceeded
/// for Re s <= -2.
ApproxValue hurwitz_zeta(Complex s, double z, const EvalConfig& cfg = {});

/// sum_{n>=1} e^{2 pi i n z} / n^s for Re s > 1 and 0 <= z <= 1; z = 0 and
/// z = 1 give the Riemann zeta value.
ApproxValue lerch_L(Complex s, double z, const EvalConfig& cfg = {});

/// sum_n (alpha)_n x^n / ((gamma)_n n!). Switches to MPFR arithmetic when the
/// terms cancel. Throws PoleError when gamma is a nonpositive integer.
ApproxValue kummer_F(Complex alpha, Complex gamma, Complex x, const EvalConfig& cfg = {});

/// (1/Gamma(alpha)) int_0^inf e^{-xu} (1+u)^{gamma-alpha-1} u^{alpha-1} du,
/// for Re alpha > 0 and Re x > 0 (DomainError otherwise).
ApproxValue kummer_U(Complex alpha, Complex gamma, Complex x, double tol = 1e-13);

enum class ConnectionVariant {
    printed,  ///< Gamma(1 + alpha) in the first denominator
    classical ///< Gamma(1 + alpha - gamma)
};

/// The two-term combination of F giving U.
Complex kummer_U_connection(Complex alpha, Complex gamma, Complex x, ConnectionVariant v);

struct KummerConnectionResult {
    Complex integral;
    double printed = 0.0;   ///< |U_integral - U_printed|
    double classical = 0.0; ///< |U_integral - U_classical|
};
KummerConnectionResult check_kummer_connection(Complex alpha, Complex gamma, Complex x);

/// |zeta(s, z) - Gamma(1-s){(2 pi i)^{s-1} L(1-s, z) + (-2 pi i)^{s-1} L(1-s, 1-z)}|
/// for -2 < Re s < 0 and 0 <= z <= 1.
double check_hurwitz_relation(Complex s, double z);

struct Em2Result {
    Complex truncated;          ///< right side with |l| <= L_max
    double residual = 0.0;      ///< |zeta(s, z) - truncated|
    Complex tail_estimate;      ///< leading x^{-1} asymptotic of the omitted |l| > L_max
    double corrected_residual = 0.0;
};

/// zeta(s, z) = z^{1-s}/(s-1) + z^{-s}/2 + (s z^{-s} / 2 pi i) sum_{l != 0} U(1, 1-s; -2 pi i l z) / l
/// with U from the connection formula. Needs -2 < Re s < 0 and 0 < z <= 1.
Em2Result check_em2(Complex s, double z, int l_max);

} // namespace mzv
