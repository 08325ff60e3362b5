#include "mzv/mellin_sum.hpp"

#include <cfloat>
#include <cmath>

#include <fmt/format.h>

#include "mzv/errors.hpp"
#include "mzv/quadrature.hpp"

namespace mzv {

namespace {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

long double inv_pow(long double n, int k) {
    const long double inv = 1.0L / n;
    long double r = 1.0L;
    for (int i = 0; i < k; ++i) r *= inv;
    return r;
}

// Running symmetric functions of x_1, x_2, ... with x_n = 1/n.
struct SymmetricSums {
    std::vector<long double> e; // elementary e_r of x_1..x_{n-1}
    std::vector<long double> h; // complete homogeneous h_r of x_1..x_n

    explicit SymmetricSums(int degree) : e(degree + 1, 0.0L), h(degree + 1, 0.0L) {
        e[0] = 1.0L;
        h[0] = 1.0L;
    }
    // before: e over 1..n-2, h over 1..n-1; after: e over 1..n-1, h over 1..n
    void advance(long n) {
        if (n > 1) {
            const long double xe = 1.0L / static_cast<long double>(n - 1);
            for (int r = static_cast<int>(e.size()) - 1; r >= 1; --r) e[r] += xe * e[r - 1];
        }
        const long double xh = 1.0L / static_cast<long double>(n);
        for (std::size_t r = 1; r < h.size(); ++r) h[r] += xh * h[r - 1];
    }
    // (1/n) h_{j-1} (-1)^{m-j} e_{m-j}: the lemma weight of n_j = n
    long double lemma_weight(int m, int j, long n) const {
        const long double sign = (m - j) % 2 ? -1.0L : 1.0L;
        return h[j - 1] * sign * e[m - j] / static_cast<long double>(n);
    }
};

void check_lambda_not_pole(Complex lambda) {
    if (lambda.imag() == 0.0 && lambda.real() >= 1.0 && lambda.real() == std::round(lambda.real()))
        throw PoleError(fmt::format("pole at lambda = {}", lambda.real()));
}

} // namespace

ApproxValue mellin_quadrature(const std::function<double(double, double)>& f, Complex lambda, double tol) {
    const double a = lambda.real() - 1.0;
    const double b = lambda.imag();
    auto kernel = [&](double z, double xc, bool imag) {
        const double omz = xc > 0.0 ? xc : 1.0 - z;
        const double lz = std::log(z);
        const double fz = f(z, omz);
        if (fz == 0.0) return 0.0;
        // z^a alone can overflow near 0 where f vanishes
        const double mag = std::copysign(std::exp(std::log(std::fabs(fz)) + a * lz), fz);
        return imag ? mag * std::sin(b * lz) : mag * std::cos(b * lz);
    };
    const QuadResult re = integrate([&](double z, double xc) { return kernel(z, xc, false); }, 0.0, 1.0, tol);
    if (b == 0.0) return {re.value, re.err};
    const QuadResult im = integrate([&](double z, double xc) { return kernel(z, xc, true); }, 0.0, 1.0, tol);
    return {Complex(re.value, im.value), re.err + im.err};
}

ApproxValue mellin_quadrature(const std::function<double(double)>& f, Complex lambda, double tol) {
    return mellin_quadrature([&](double z, double) { return f(z); }, lambda, tol);
}

double li_unit_interval(Word w, double z, double one_minus_z, MzvEvaluator& mzv) {
    if (z <= 0.5) return li_word(w, z, mzv.config()).value.real();
    return li_near_one(w, one_minus_z, mzv).value.real();
}

long double power_tail(int p, long n) {
    const long double N = static_cast<long double>(n);
    const long double P = p;
    const long double fN = inv_pow(N, p);
    return N * fN / (P - 1.0L) - fN / 2.0L + P * fN / N / 12.0L -
           P * (P + 1) * (P + 2) * fN / (N * N * N) / 720.0L +
           P * (P + 1) * (P + 2) * (P + 3) * (P + 4) * fN / (N * N * N * N * N) / 30240.0L;
}

ApproxValue mellin_li_series(int k, Complex lambda, const EvalConfig& cfg) {
    cfg.validate();
    if (k < 2) throw std::invalid_argument("mellin_li_series needs k >= 2");
    check_lambda_not_pole(lambda);
    using LC = std::complex<long double>;
    const LC lam(lambda.real(), lambda.imag());
    const long N = std::max<long>(2000, static_cast<long>(8.0 * std::abs(lambda)));
    LC head = 0.0L;
    for (long n = 1; n <= N; ++n) {
        const long double nl = static_cast<long double>(n);
        head += inv_pow(nl, k) / (nl - lam);
    }
    // 1/(n^k (n - lambda)) = sum_j lambda^j n^{-k-1-j}
    LC tail = 0.0L;
    LC lj = 1.0L;
    double dropped = 0.0;
    for (int j = 0; j < 40; ++j) {
        const LC term = lj * power_tail(k + 1 + j, N);
        tail += term;
        dropped = static_cast<double>(std::abs(term));
        if (dropped < 1e-30) break;
        lj *= lam;
    }
    const LC v = head + tail;
    const double err = dropped + 1e-15 * static_cast<double>(std::abs(v)) +
                       static_cast<double>(inv_pow(static_cast<long double>(N), k + 7)) * 1e3;
    return {Complex(static_cast<double>(v.real()), static_cast<double>(v.imag())), err};
}

IdentitySides euler_mellin_sides(int k, double lambda) {
    if (k < 2) throw std::invalid_argument("euler_mellin_sides needs k >= 2");
    if (!(lambda < 1.0) || lambda == 0.0) throw DomainError(fmt::format("need lambda < 1, lambda != 0; got {}", lambda));
    const long N = 10000;
    const long double lam = lambda;
    long double lhs = 0.0L, rhs = 0.0L;
    for (long n = 1; n <= N; ++n) {
        const long double nl = static_cast<long double>(n);
        for (int j = 0; j < k; ++j) lhs += inv_pow(nl, k - j) * inv_pow(nl - lam, j + 1);
        rhs += inv_pow(nl, k) - inv_pow(nl - lam, k);
    }
    // lhs tail: n^{-(k-j)} (n-lambda)^{-(j+1)} = sum_i C(j+i, i) lambda^i n^{-k-1-i}
    long double lhs_tail = 0.0L;
    for (int j = 0; j < k; ++j) {
        long double li = 1.0L;
        for (int i = 0; i < 12; ++i) {
            lhs_tail += static_cast<long double>(binomial(j + i, i)) * li * power_tail(k + 1 + i, N);
            li *= lam;
        }
    }
    // rhs tail: midpoint rule, sum_{n>N} g(n) ~ int_{N+1/2}^inf g
    const long double c = static_cast<long double>(N) + 0.5L;
    const long double rhs_tail = (std::pow(c, 1.0L - k) - std::pow(c - lam, 1.0L - k)) / (k - 1);
    const long double gprime = k * (std::pow(c - lam, -1.0L - k) - std::pow(c, -1.0L - k));
    IdentitySides s;
    s.lhs = {static_cast<double>(lhs + lhs_tail), 1e-15 * static_cast<double>(lhs)};
    s.rhs = {static_cast<double>((rhs + rhs_tail) / -lam),
             static_cast<double>(std::fabs(gprime / 24.0L / lam)) + 1e-15 * std::fabs(static_cast<double>(rhs / lam))};
    return s;
}

double check_euler_mellin(int k, double lambda) { return euler_mellin_sides(k, lambda).residual(); }

IdentitySides beta_term_sides(int k, double lambda, MzvEvaluator& mzv) {
    if (k < 2) throw std::invalid_argument("beta_term_sides needs k >= 2");
    if (!(lambda < 0.0)) throw DomainError(fmt::format("beta term needs lambda < 0, got {}", lambda));
    MultiIndex idx{{2}};
    for (int i = 2; i < k; ++i) idx.parts.push_back(1);
    const Word w = idx.to_word();

    IdentitySides s;
    // Li(w; 1 - z): the argument is near 1 when z is small
    s.lhs = mellin_quadrature(
        [&](double z, double omz) { return li_unit_interval(w, omz, z, mzv); }, -lambda, 1e-11);

    // r_n = Gamma(-lambda) Gamma(n+1) / Gamma(n+1-lambda), r_0 = -1/lambda
    const long N = 1000000;
    const long double lam = lambda;
    long double r = -1.0L / lam;
    std::vector<long double> inner(k, 0.0L); // inner[i]: sum over n > n_{i+2} > ... of 1/(n_{i+2} ...)
    inner[k - 2] = 1.0L;
    long double sum = 0.0L, last = 0.0L;
    for (long n = 1; n <= N; ++n) {
        const long double nl = static_cast<long double>(n);
        r *= nl / (nl - lam);
        last = r * inner[0] / (nl * nl);
        sum += last;
        for (int i = 0; i + 2 < k; ++i) inner[i] += inner[i + 1] / nl;
    }
    // terms behave like c n^{-p} L^q with p = 2 - lambda, q = k - 2 and
    // L ~ log n + gamma; integrate that profile from N
    const int q = k - 2;
    const long double L = std::log(static_cast<long double>(N)) + 0.5772156649015329L;
    long double profile = 0.0L, ratio = 1.0L / (1.0L - lam);
    for (int i = 0; i <= q; ++i) {
        profile += ratio;
        ratio *= static_cast<long double>(q - i) / (L * (1.0L - lam));
    }
    const long double tail = last * static_cast<long double>(N) * profile;
    s.rhs = {static_cast<double>(sum + tail), 0.05 * static_cast<double>(tail) + 1e-14};
    return s;
}

double check_beta_term(int k, double lambda, const EvalConfig& cfg) {
    MzvEvaluator mzv(cfg);
    return beta_term_sides(k, lambda, mzv).residual();
}

double check_heart(int n, int k, MzvEvaluator& mzv) {
    if (k < 2 || k > n) throw DomainError(fmt::format("heart identity needs 2 <= k <= n, got n={} k={}", n, k));
    Complex lhs = 0.0;
    for (int d = k - 1; d <= n - 1; ++d)
        lhs += static_cast<double>(binomial(d - 1, k - 2)) * sum_weight_depth(n, d, mzv).value;
    const Complex rhs = static_cast<double>(binomial(n - 1, k - 1)) * mzv.index(MultiIndex{{n}}).value;
    return std::abs(lhs - rhs);
}

double check_heart(int n, int k, const EvalConfig& cfg) {
    MzvEvaluator mzv(cfg);
    return check_heart(n, k, mzv);
}

std::vector<double> check_sum_formula(int n, MzvEvaluator& mzv) {
    if (n < 2) throw DomainError("sum formula needs n >= 2");
    const Complex zn = mzv.index(MultiIndex{{n}}).value;
    std::vector<double> out;
    for (int r = 1; r <= n - 1; ++r) out.push_back(std::abs(sum_weight_depth(n, r, mzv).value - zn));
    return out;
}

std::vector<double> check_sum_formula(int n, const EvalConfig& cfg) {
    MzvEvaluator mzv(cfg);
    return check_sum_formula(n, mzv);
}

bool heart_binomial_identity(int n) {
    for (int r = 1; r <= n - 1; ++r) {
        long long lhs = 0;
        for (int d = r + 1; d <= n - 1; ++d) lhs += binomial(d - 1, r - 1);
        if (lhs != binomial(n - 1, r) - 1) return false;
    }
    return true;
}

ApproxValue landen_lemma_lhs(int m, int j, double z) {
    if (j < 1 || j > m || m > 12) throw DomainError(fmt::format("lemma needs 1 <= j <= m, got m={} j={}", m, j));
    if (!(z > 0.0 && z < 0.5)) throw DomainError(fmt::format("lemma needs 0 < z < 1/2, got {}", z));
    SymmetricSums sym(m);
    long double sum = 0.0L, abs_sum = 0.0L;
    long double zn = 1.0L, harmonic = 0.0L;
    double bound = 0.0;
    for (long n = 1; n < 100000; ++n) {
        sym.advance(n);
        zn *= z;
        harmonic += 1.0L / static_cast<long double>(n);
        const long double term = zn * sym.lemma_weight(m, j, n);
        sum += term;
        abs_sum += std::fabs(term);
        // |h_{j-1}|, |e_{m-j}| <= H_n^{m-1}; geometric tail beyond n
        bound = static_cast<double>(zn * std::pow(harmonic + 1.0L, m - 1) / static_cast<long double>(n)) * z / (1.0 - z);
        if (n >= m && bound < 1e-18) break;
    }
    return {static_cast<double>(sum), bound + 1e-15 * static_cast<double>(abs_sum)};
}

ApproxValue landen_lemma_rhs(int m, int j, double z, const EvalConfig& cfg) {
    const Complex w = apply(Mobius::z_over_z_minus_1, z);
    ApproxValue sum;
    for (const auto& c : compositions(m, m - j + 1)) sum = sum + li_admissible(c, w, cfg);
    return {-sum.value, sum.err};
}

double check_landen_lemma(int m, int j, double z, const EvalConfig& cfg) {
    return std::abs(landen_lemma_lhs(m, j, z).value - landen_lemma_rhs(m, j, z, cfg).value);
}

MellinLandenResult check_mellin_landen(int m, double lambda, MzvEvaluator& mzv) {
    if (m < 1 || m > 8) throw DomainError(fmt::format("check_mellin_landen needs 1 <= m <= 8, got {}", m));
    if (!(std::fabs(lambda) < 1.0) || lambda == 0.0)
        throw DomainError(fmt::format("need 0 < |lambda| < 1, got {}", lambda));
    constexpr int orders = 3;
    const long M = 100000;
    const long double lam = lambda;
    SymmetricSums sym(m);
    long double lhs = 0.0L, rhs = 0.0L;
    std::vector<long double> coeff(orders, 0.0L);
    for (long n = 1; n <= M; ++n) {
        sym.advance(n);
        const long double nl = static_cast<long double>(n);
        long double weight = 0.0L;
        for (int j = 1; j <= m; ++j) weight += sym.lemma_weight(m, j, n);
        lhs += inv_pow(nl, m) / (nl - lam);
        rhs += weight / (nl - lam);
        // 1/(n - lambda) = sum_l lambda^l / n^{l+1}
        for (int l = 0; l < orders; ++l) coeff[l] += weight * inv_pow(nl, l + 1);
    }
    MellinLandenResult res;
    res.residual = static_cast<double>(std::fabs(lhs - rhs));
    for (int l = 0; l < orders; ++l) {
        // beyond M the j-sum of weights is 1/n^m exactly
        const long double c = coeff[l] + power_tail(m + 1 + l, M);
        const double s = sum_weight_depth(m + 1 + l, m, mzv).value.real();
        res.taylor.push_back(std::fabs(static_cast<double>(c) - s));
    }
    return res;
}

MellinLandenResult check_mellin_landen(int m, double lambda, const EvalConfig& cfg) {
    MzvEvaluator mzv(cfg);
    return check_mellin_landen(m, lambda, mzv);
}

} // namespace mzv
