#pragma once

// Mellin transforms of polylogarithms and the series identities they turn
// into. Together these identities give the sum formula S(n, r) = zeta(n).

#include <functional>
#include <vector>

#include "mzv/mzv.hpp"

namespace mzv {

/// int_0^1 f(z) z^{lambda-1} dz. f receives z and 1 - z, the latter exact
/// near z = 1. err is the quadrature estimate.
ApproxValue mellin_quadrature(const std::function<double(double, double)>& f, Complex lambda, double tol = 1e-12);
ApproxValue mellin_quadrature(const std::function<double(double)>& f, Complex lambda, double tol = 1e-12);

/// Li(w; z) for real 0 <= z < 1, switching to li_near_one above 1/2.
double li_unit_interval(Word w, double z, double one_minus_z, MzvEvaluator& mzv);

/// sum_{n > N} n^{-p} by Euler-Maclaurin, for p > 1 and N >= 100.
long double power_tail(int p, long n);

/// sum_{n >= 1} 1 / (n^k (n - lambda)), the Mellin transform of Li_k at
/// exponent -lambda-1. Throws PoleError at positive integers lambda.
ApproxValue mellin_li_series(int k, Complex lambda, const EvalConfig& cfg = {});

struct IdentitySides {
    ApproxValue lhs;
    ApproxValue rhs;
    double residual() const { return std::abs(lhs.value - rhs.value); }
};

/// lhs: sum_{j<k} sum_n 1/(n^{k-j} (n-lambda)^{j+1});
/// rhs: (1/(-lambda)) sum_n (1/n^k - 1/(n-lambda)^k). Real lambda < 1, lambda != 0.
IdentitySides euler_mellin_sides(int k, double lambda);
double check_euler_mellin(int k, double lambda);

/// lhs: int_0^1 Li_{2,1,...,1}(1-z) z^{-lambda-1} dz (weight k) by quadrature;
/// rhs: sum 1/(n_1^2 n_2 ... n_{k-1}) Gamma(-lambda) Gamma(n_1+1) / Gamma(n_1-lambda+1).
/// Needs lambda < 0.
IdentitySides beta_term_sides(int k, double lambda, MzvEvaluator& mzv);
double check_beta_term(int k, double lambda, const EvalConfig& cfg = {});

/// sum_{d=k-1}^{n-1} C(d-1, k-2) S(n, d) - C(n-1, k-1) zeta(n), 2 <= k <= n.
double check_heart(int n, int k, MzvEvaluator& mzv);
double check_heart(int n, int k, const EvalConfig& cfg = {});

/// |S(n, r) - zeta(n)| for r = 1, ..., n-1.
std::vector<double> check_sum_formula(int n, MzvEvaluator& mzv);
std::vector<double> check_sum_formula(int n, const EvalConfig& cfg = {});

/// sum_{d=r+1}^{n-1} C(d-1, r-1) = C(n-1, r) - 1 for all 1 <= r <= n-1, in
/// exact integer arithmetic.
bool heart_binomial_identity(int n);

/// sum_{n_1 > ... > n_m > 0} z^{n_j} / (n_1 prod_{i != j} (n_i - n_j)), summed
/// over n = n_j with the upper block in closed form h_{j-1}(1, ..., 1/n) / n
/// and the lower block (-1)^{m-j} e_{m-j}(1, ..., 1/(n-1)).
ApproxValue landen_lemma_lhs(int m, int j, double z);
/// -sum over compositions c of m with m-j+1 parts of Li_c(z/(z-1)).
ApproxValue landen_lemma_rhs(int m, int j, double z, const EvalConfig& cfg = {});
double check_landen_lemma(int m, int j, double z, const EvalConfig& cfg = {});

struct MellinLandenResult {
    double residual = 0.0;      ///< at the sampled lambda
    std::vector<double> taylor; ///< order l: |coefficient of lambda^l - S(m+1+l, m)|
};

/// sum_n 1/(n^m (n-lambda)) against sum_j sum 1/(n_1 prod_{i != j}(n_i - n_j)(n_j - lambda)),
/// both truncated at the same n_j; Taylor coefficients l = 0..2 are taken
/// termwise and completed with the exact tail.
MellinLandenResult check_mellin_landen(int m, double lambda, MzvEvaluator& mzv);
MellinLandenResult check_mellin_landen(int m, double lambda, const EvalConfig& cfg = {});

} // namespace mzv
