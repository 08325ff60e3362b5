#include "mzv/hurwitz.hpp"

#include <cfloat>
#include <cmath>
#include <numbers>

#include <mpfr.h>
#include <fmt/format.h>

#include "mzv/errors.hpp"
#include "mzv/quadrature.hpp"
#include "mzv/special.hpp"

namespace mzv {

namespace {

constexpr double pi = std::numbers::pi;

Rational binomial_q(int n, int k) {
    Rational r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Rational factorial_q(int n) {
    Rational r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

bool is_nonpositive_integer(Complex c) {
    return c.imag() == 0.0 && c.real() <= 0.0 && c.real() == std::round(c.real());
}

} // namespace

BernoulliTable::BernoulliTable() {
    std::vector<Rational> numbers(max_degree + 1);
    numbers[0] = 1;
    for (int n = 1; n <= max_degree; ++n) {
        // sum_{k<=n} C(n+1, k) B_k = 0
        Rational acc = 0;
        for (int k = 0; k < n; ++k) acc += binomial_q(n + 1, k) * numbers[k];
        numbers[n] = -acc / (n + 1);
        numbers[n].canonicalize();
    }
    // B_n(t) = sum_k C(n, k) B_{n-k} t^k
    for (int n = 0; n <= max_degree; ++n) {
        std::vector<Rational> p(n + 1);
        for (int k = 0; k <= n; ++k) {
            p[k] = binomial_q(n, k) * numbers[n - k];
            p[k].canonicalize();
        }
        polys_.push_back(std::move(p));
    }
}

const BernoulliTable& BernoulliTable::instance() {
    static const BernoulliTable table;
    return table;
}

double BernoulliTable::eval(int n, double t) const {
    const auto& p = polys_.at(n);
    double v = 0.0;
    for (int k = n; k >= 0; --k) v = v * t + p[k].get_d();
    return v;
}

double BernoulliTable::periodic(int n, double t) const { return eval(n, t - std::floor(t)); }

bool BernoulliTable::generating_identity_holds() const {
    // sum_{a+b=n} B_a(t)/a! * 1/(b+1)! must equal t^n/n!, coefficientwise in t
    for (int n = 0; n <= max_degree; ++n) {
        std::vector<Rational> lhs(n + 1, Rational(0));
        for (int a = 0; a <= n; ++a) {
            const Rational scale = 1 / (factorial_q(a) * factorial_q(n - a + 1));
            for (int k = 0; k <= a; ++k) lhs[k] += polys_[a][k] * scale;
        }
        for (int k = 0; k <= n; ++k) {
            lhs[k].canonicalize();
            const Rational expected = k == n ? Rational(1 / factorial_q(n)) : Rational(0);
            if (lhs[k] != expected) return false;
        }
    }
    return true;
}

double b2_fourier(double t, int terms) {
    double sum = 0.0;
    for (int n = terms; n >= 1; --n) sum += std::cos(2.0 * pi * n * t) / (static_cast<double>(n) * n);
    return sum / (pi * pi);
}

ApproxValue hurwitz_zeta(Complex s, double z, const EvalConfig& cfg) {
    cfg.validate();
    if (s == Complex(1.0)) throw PoleError("zeta(s, z) has a pole at s = 1");
    if (s.real() <= -2.0) throw StripExceeded(fmt::format("Re s = {} is outside Re s > -2", s.real()));
    if (!(z > 0.0)) throw DomainError(fmt::format("hurwitz_zeta needs z > 0, got {}", z));

    Complex value = std::pow(z, 1.0 - s) / (s - 1.0) + std::pow(z, -s) / 2.0 + s * std::pow(z, -s - 1.0) / 12.0;

    // remainder int_0^inf (B2bar/2) f'' with f'' = s(s+1)(z+t)^{-s-2}
    const Complex c2 = s * (s + 1.0);
    const int K = std::max(30, static_cast<int>(2.0 * std::abs(s)) + 10);
    Complex remainder = 0.0;
    double err = 0.0;
    for (int k = 0; k < K; ++k) {
        auto g = [&](double u, bool imag) {
            const Complex v = 0.5 * (u * u - u + 1.0 / 6.0) * c2 * std::pow(z + k + u, -s - 2.0);
            return imag ? v.imag() : v.real();
        };
        const QuadResult re = integrate_smooth([&](double u) { return g(u, false); }, 0.0, 1.0, 1e-15);
        const QuadResult im = integrate_smooth([&](double u) { return g(u, true); }, 0.0, 1.0, 1e-15);
        remainder += Complex(re.value, im.value);
        err += re.err + im.err;
    }
    // int_K^inf (B2bar/2) f'' = sum_{j>=2} B_{2j}/(2j)! f^{(2j-1)}(K)
    const auto& bern = BernoulliTable::instance();
    auto derivative = [&](int r) {
        Complex falling = 1.0;
        for (int i = 0; i < r; ++i) falling *= -s - static_cast<double>(i);
        return falling * std::pow(z + K, -s - static_cast<double>(r));
    };
    for (int j = 2; j <= 4; ++j)
        remainder += Rational(bern.number(2 * j) / factorial_q(2 * j)).get_d() * derivative(2 * j - 1);
    // next term, B_10 / 10! = 5/66 / 10!
    err += std::abs(5.0 / 66.0 / 3628800.0 * derivative(9));

    value -= remainder;
    return {value, err + 1e-15 * std::abs(value)};
}

namespace {

ApproxValue riemann_zeta_series(Complex s) {
    using LC = std::complex<long double>;
    const long N = 200;
    LC sum = 0.0L;
    const LC sl(s.real(), s.imag());
    for (long n = N - 1; n >= 1; --n) sum += std::pow(static_cast<long double>(n), -sl);
    // sum_{n>=N} n^{-s} by Euler-Maclaurin
    const LC Nl = static_cast<long double>(N);
    const LC f = std::pow(Nl, -sl);
    const LC t = Nl * f / (sl - 1.0L) + f / 2.0L + sl * f / Nl / 12.0L -
                 sl * (sl + 1.0L) * (sl + 2.0L) * f / (Nl * Nl * Nl) / 720.0L +
                 sl * (sl + 1.0L) * (sl + 2.0L) * (sl + 3.0L) * (sl + 4.0L) * f / std::pow(Nl, 5) / 30240.0L;
    const LC v = sum + t;
    const double next = std::abs(std::pow(s + 7.0, 7)) * std::pow(static_cast<double>(N), -s.real() - 7) / 1209600.0;
    return {Complex(static_cast<double>(v.real()), static_cast<double>(v.imag())), next + 1e-16 * std::abs(Complex(static_cast<double>(v.real()), static_cast<double>(v.imag())))};
}

} // namespace

namespace {

// Delta^k n^{-s} at n = N for k = 0..K from Delta^k = (e^D - 1)^k, i.e.
// N^{-s} sum_{m>=k} c(m, k) (-1)^m (s)_m N^{-m} with sum_m c(m, k) x^m = (e^x - 1)^k.
std::vector<std::complex<long double>> power_differences(std::complex<long double> s, long N, int K) {
    using LC = std::complex<long double>;
    const int M = K + 400;
    std::vector<std::vector<long double>> c(K + 1, std::vector<long double>(M + 1, 0.0L));
    c[0][0] = 1.0L;
    std::vector<long double> inv_fact(M + 1, 1.0L);
    for (int j = 1; j <= M; ++j) inv_fact[j] = inv_fact[j - 1] / j;
    for (int k = 1; k <= K; ++k)
        for (int m = k; m <= M; ++m)
            for (int j = 1; j <= m - k + 1; ++j) c[k][m] += c[k - 1][m - j] * inv_fact[j];
    const long double n = static_cast<long double>(N);
    const LC base = std::pow(n, -s);
    std::vector<LC> out(K + 1);
    for (int k = 0; k <= K; ++k) {
        LC poch = 1.0L; // (-1)^m (s)_m / N^m
        LC acc = 0.0L;
        for (int m = 0; m <= M; ++m) {
            if (m >= k) {
                const LC term = c[k][m] * poch;
                acc += term;
                if (m > k + 2 && std::abs(term) < 1e-22L * std::abs(acc)) break;
            }
            poch *= -(s + static_cast<long double>(m)) / n;
        }
        out[k] = base * acc;
    }
    return out;
}

} // namespace

ApproxValue lerch_L(Complex s, double z, const EvalConfig& cfg) {
    cfg.validate();
    if (!(s.real() > 1.0)) throw DomainError(fmt::format("lerch_L needs Re s > 1, got {}", s.real()));
    if (!(z >= 0.0 && z <= 1.0)) throw DomainError(fmt::format("lerch_L needs 0 <= z <= 1, got {}", z));
    if (z == 0.0 || z == 1.0) return riemann_zeta_series(s);

    using LC = std::complex<long double>;
    const LC sl(s.real(), s.imag());
    const long double theta = 2.0L * std::numbers::pi_v<long double> * z;
    const LC q(std::cos(theta), std::sin(theta));
    // the Euler transform of the tail contracts once N |1 - q| >= 40
    const long double gap = std::abs(1.0L - q);
    const long double wanted = std::max(64.0L, std::ceil(40.0L / gap));
    if (wanted > static_cast<long double>(cfg.max_terms))
        throw Unconverged(fmt::format("lerch_L at z = {} needs {} terms", z, static_cast<double>(wanted)));
    const long N = static_cast<long>(wanted);
    LC head = 0.0L;
    LC qn = 1.0L;
    for (long n = 1; n < N; ++n) {
        qn *= q;
        head += qn * std::pow(static_cast<long double>(n), -sl);
    }
    qn *= q; // q^N
    // sum_{n>=N} q^n f(n) = q^N sum_k q^k / (1-q)^{k+1} Delta^k f(N)
    constexpr int K = 60;
    const std::vector<LC> diff = power_differences(sl, N, K);
    const LC ratio = q / (1.0L - q);
    LC scale = 1.0L / (1.0L - q);
    LC tail = 0.0L;
    double last = 0.0, abs_sum = 0.0;
    for (int k = 0; k <= K; ++k) {
        const LC term = scale * diff[k];
        tail += term;
        last = static_cast<double>(std::abs(term));
        abs_sum += last;
        if (k > 2 && last < 1e-18) break;
        scale *= ratio;
    }
    const LC v = head + qn * tail;
    const Complex value(static_cast<double>(v.real()), static_cast<double>(v.imag()));
    return {value, last + 1e-16 * std::abs(value) + 1e-15 * abs_sum};
}

namespace {

// Owning mpfr_t with a fixed precision.
class Mp {
public:
    explicit Mp(mpfr_prec_t bits, double v = 0.0) {
        mpfr_init2(x_, bits);
        mpfr_set_d(x_, v, MPFR_RNDN);
    }
    ~Mp() { mpfr_clear(x_); }
    Mp(const Mp&) = delete;
    Mp& operator=(const Mp&) = delete;
    mpfr_ptr get() { return x_; }
    mpfr_srcptr get() const { return x_; }
    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }

private:
    mpfr_t x_;
};

struct SeriesPass {
    Complex value;
    double tail = 0.0;
    double log2_max_term = 0.0;
    double log2_value = 0.0;
};

// (re, im) *= (cr, ci); imaginary parts that are exactly zero are skipped
void mp_cmul(Mp& re, Mp& im, const Mp& cr, const Mp& ci, bool c_real, bool c_imag, Mp& s1, Mp& s2) {
    if (!c_imag) {
        mpfr_mul(re.get(), re.get(), cr.get(), MPFR_RNDN);
        mpfr_mul(im.get(), im.get(), cr.get(), MPFR_RNDN);
        return;
    }
    if (!c_real) {
        // (a + bi)(ci i) = -b ci + a ci i
        mpfr_mul(s1.get(), im.get(), ci.get(), MPFR_RNDN);
        mpfr_mul(im.get(), re.get(), ci.get(), MPFR_RNDN);
        mpfr_neg(re.get(), s1.get(), MPFR_RNDN);
        return;
    }
    mpfr_mul(s1.get(), re.get(), cr.get(), MPFR_RNDN);
    mpfr_mul(s2.get(), im.get(), ci.get(), MPFR_RNDN);
    mpfr_mul(im.get(), im.get(), cr.get(), MPFR_RNDN);
    mpfr_fma(im.get(), re.get(), ci.get(), im.get(), MPFR_RNDN);
    mpfr_sub(re.get(), s1.get(), s2.get(), MPFR_RNDN);
}

SeriesPass kummer_series_mp(Complex alpha, Complex gamma, Complex x, unsigned bits, int max_terms) {
    const mpfr_prec_t prec = bits;
    Mp tr(prec, 1.0), ti(prec), sr(prec, 1.0), si(prec);
    Mp xr(prec, x.real()), xi(prec, x.imag());
    Mp ar(prec, alpha.real()), ai(prec, alpha.imag());
    Mp gr(prec, gamma.real()), gi(prec, gamma.imag());
    Mp s1(prec), s2(prec), s3(prec), norm(prec);
    const bool alpha_imag = alpha.imag() != 0.0, gamma_imag = gamma.imag() != 0.0;
    const bool x_real = x.real() != 0.0, x_imag = x.imag() != 0.0;
    double log2_t = 0.0, log2_max = 0.0, log2_sum = 0.0;
    double tail = 0.0;
    for (int n = 0;; ++n) {
        if (n > max_terms)
            throw Unconverged(fmt::format("confluent series at |x| = {} needs more than {} terms", std::abs(x), max_terms));
        if (mpfr_zero_p(ar.get()) && !alpha_imag) break; // alpha a nonpositive integer: polynomial
        const Complex c = (alpha + static_cast<double>(n)) * x / ((gamma + static_cast<double>(n)) * (n + 1.0));
        // t *= (alpha + n) x / ((gamma + n)(n + 1))
        mp_cmul(tr, ti, ar, ai, true, alpha_imag, s1, s2);
        mp_cmul(tr, ti, xr, xi, x_real, x_imag, s1, s2);
        if (!gamma_imag) {
            mpfr_div(tr.get(), tr.get(), gr.get(), MPFR_RNDN);
            mpfr_div(ti.get(), ti.get(), gr.get(), MPFR_RNDN);
        } else {
            mpfr_sqr(norm.get(), gr.get(), MPFR_RNDN);
            mpfr_fma(norm.get(), gi.get(), gi.get(), norm.get(), MPFR_RNDN);
            mpfr_neg(s3.get(), gi.get(), MPFR_RNDN);
            mp_cmul(tr, ti, gr, s3, true, true, s1, s2);
            mpfr_div(tr.get(), tr.get(), norm.get(), MPFR_RNDN);
            mpfr_div(ti.get(), ti.get(), norm.get(), MPFR_RNDN);
        }
        mpfr_div_ui(tr.get(), tr.get(), static_cast<unsigned long>(n + 1), MPFR_RNDN);
        mpfr_div_ui(ti.get(), ti.get(), static_cast<unsigned long>(n + 1), MPFR_RNDN);
        mpfr_add(sr.get(), sr.get(), tr.get(), MPFR_RNDN);
        mpfr_add(si.get(), si.get(), ti.get(), MPFR_RNDN);
        mpfr_add_ui(ar.get(), ar.get(), 1, MPFR_RNDN);
        mpfr_add_ui(gr.get(), gr.get(), 1, MPFR_RNDN);

        log2_t += std::log2(std::abs(c));
        log2_max = std::max(log2_max, log2_t);
        const double r = std::abs((alpha + static_cast<double>(n + 1)) * x /
                                  ((gamma + static_cast<double>(n + 1)) * static_cast<double>(n + 2)));
        if (r < 0.5 && (n % 16 == 0)) {
            mpfr_hypot(s1.get(), sr.get(), si.get(), MPFR_RNDN);
            long e = 0;
            const double mant = mpfr_get_d_2exp(&e, s1.get(), MPFR_RNDN);
            log2_sum = mant == 0.0 ? -HUGE_VAL : std::log2(mant) + static_cast<double>(e);
            if (log2_t < log2_sum - 60.0) {
                tail = std::exp2(log2_t) * r / (1.0 - r);
                break;
            }
        }
    }
    SeriesPass p;
    p.value = Complex(sr.to_double(), si.to_double());
    p.tail = tail;
    p.log2_max_term = log2_max;
    p.log2_value = std::log2(std::abs(p.value));
    return p;
}

} // namespace

ApproxValue kummer_F(Complex alpha, Complex gamma, Complex x, const EvalConfig& cfg) {
    cfg.validate();
    if (is_nonpositive_integer(gamma)) throw PoleError(fmt::format("F(alpha, gamma; x) has a pole at gamma = {}", gamma.real()));
    using LC = std::complex<long double>;
    const LC X(x.real(), x.imag());
    LC t = 1.0L, sum = 1.0L;
    long double max_term = 1.0L;
    double tail = 0.0;
    for (int n = 0;; ++n) {
        if (n > cfg.max_terms)
            throw Unconverged(fmt::format("confluent series at |x| = {} needs more than {} terms", std::abs(x), cfg.max_terms));
        const LC num(alpha.real() + n, alpha.imag());
        if (num == LC(0.0L)) break;
        t *= num * X / (LC(gamma.real() + n, gamma.imag()) * static_cast<long double>(n + 1));
        sum += t;
        max_term = std::max(max_term, std::abs(t));
        const double r = std::abs((alpha + static_cast<double>(n + 1)) * x /
                                  ((gamma + static_cast<double>(n + 1)) * static_cast<double>(n + 2)));
        if (r < 0.5 && std::abs(t) < 1e-21L * std::abs(sum)) {
            tail = static_cast<double>(std::abs(t)) * r / (1.0 - r);
            break;
        }
    }
    const long double cancellation = max_term / std::max(std::abs(sum), LDBL_MIN);
    if (cancellation < 1e3L) {
        const Complex v(static_cast<double>(sum.real()), static_cast<double>(sum.imag()));
        return {v, tail + 1e-16 * std::abs(v) + 1e-18 * static_cast<double>(max_term)};
    }
    // the terms cancel: redo with enough bits to absorb the largest term
    unsigned bits = 96 + static_cast<unsigned>(std::max(0.0L, std::log2(max_term)));
    for (int attempt = 0; attempt < 4; ++attempt) {
        const SeriesPass p = kummer_series_mp(alpha, gamma, x, bits, cfg.max_terms);
        const double lost = p.log2_max_term - p.log2_value;
        if (lost + 64 <= bits) {
            return {p.value, p.tail + 1e-16 * std::abs(p.value) + std::exp2(p.log2_max_term - static_cast<double>(bits) + 8)};
        }
        bits = static_cast<unsigned>(lost) + 96;
    }
    throw Unconverged(fmt::format("confluent series at x = ({}, {}) lost too much precision", x.real(), x.imag()));
}

ApproxValue kummer_U(Complex alpha, Complex gamma, Complex x, double tol) {
    if (!(alpha.real() > 0.0) || !(x.real() > 0.0))
        throw DomainError("the integral for U needs Re alpha > 0 and Re x > 0");
    const Complex ga = complex_gamma(alpha);
    auto h = [&](double u) {
        return std::exp(-x * u + (gamma - alpha - 1.0) * std::log1p(u) + (alpha - 1.0) * std::log(u)) / ga;
    };
    const QuadResult r0 = integrate([&](double u) { return h(u).real(); }, 0.0, 1.0, tol);
    const QuadResult i0 = integrate([&](double u) { return h(u).imag(); }, 0.0, 1.0, tol);
    const QuadResult r1 = integrate_to_infinity([&](double u) { return h(u).real(); }, 1.0, tol);
    const QuadResult i1 = integrate_to_infinity([&](double u) { return h(u).imag(); }, 1.0, tol);
    return {Complex(r0.value + r1.value, i0.value + i1.value), r0.err + i0.err + r1.err + i1.err};
}

Complex kummer_U_connection(Complex alpha, Complex gamma, Complex x, ConnectionVariant v) {
    const Complex first_den = v == ConnectionVariant::printed ? complex_gamma(1.0 + alpha) : complex_gamma(1.0 + alpha - gamma);
    const Complex first = complex_gamma(1.0 - gamma) / first_den * kummer_F(alpha, gamma, x).value;
    const Complex second = complex_gamma(gamma - 1.0) / complex_gamma(alpha) * std::exp(x) * std::pow(x, 1.0 - gamma) *
                           kummer_F(1.0 - alpha, 2.0 - gamma, -x).value;
    return first + second;
}

KummerConnectionResult check_kummer_connection(Complex alpha, Complex gamma, Complex x) {
    KummerConnectionResult r;
    r.integral = kummer_U(alpha, gamma, x).value;
    r.printed = std::abs(r.integral - kummer_U_connection(alpha, gamma, x, ConnectionVariant::printed));
    r.classical = std::abs(r.integral - kummer_U_connection(alpha, gamma, x, ConnectionVariant::classical));
    return r;
}

double check_hurwitz_relation(Complex s, double z) {
    if (!(s.real() > -2.0 && s.real() < 0.0)) throw DomainError(fmt::format("need -2 < Re s < 0, got {}", s.real()));
    if (!(z >= 0.0 && z <= 1.0)) throw DomainError(fmt::format("need 0 <= z <= 1, got {}", z));
    const Complex lhs = hurwitz_zeta(s, z == 0.0 ? 1.0 : z).value;
    const Complex two_pi_i(0.0, 2.0 * pi);
    const Complex rhs = complex_gamma(1.0 - s) * (std::pow(two_pi_i, s - 1.0) * lerch_L(1.0 - s, z).value +
                                                 std::pow(-two_pi_i, s - 1.0) * lerch_L(1.0 - s, 1.0 - z).value);
    return std::abs(lhs - rhs);
}

Em2Result check_em2(Complex s, double z, int l_max) {
    if (!(s.real() > -2.0 && s.real() < 0.0)) throw DomainError(fmt::format("need -2 < Re s < 0, got {}", s.real()));
    if (!(z > 0.0 && z <= 1.0)) throw DomainError(fmt::format("need 0 < z <= 1, got {}", z));
    if (l_max < 1) throw std::invalid_argument("l_max must be positive");
    Complex sum = 0.0;
    for (int l = 1; l <= l_max; ++l) {
        for (int sign : {1, -1}) {
            const double ll = sign * l;
            const Complex x(0.0, -2.0 * pi * ll * z);
            sum += kummer_U_connection(1.0, 1.0 - s, x, ConnectionVariant::classical) / ll;
        }
    }
    const Complex two_pi_i(0.0, 2.0 * pi);
    const Complex pre = s * std::pow(z, -s) / two_pi_i;
    Em2Result r;
    r.truncated = std::pow(z, 1.0 - s) / (s - 1.0) + std::pow(z, -s) / 2.0 + pre * sum;
    const Complex exact = hurwitz_zeta(s, z).value;
    r.residual = std::abs(exact - r.truncated);
    // U(1, 1-s; x) ~ 1/x: the pair +-l contributes i/(pi z l^2) to the sum
    r.tail_estimate = pre * Complex(0.0, 1.0) / (pi * z * (l_max + 0.5));
    r.corrected_residual = std::abs(exact - r.truncated - r.tail_estimate);
    return r;
}

} // namespace mzv
