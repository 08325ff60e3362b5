#include "mzv/polylog.hpp"

#include <cfloat>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <fmt/format.h>

#include "mzv/errors.hpp"
#include "mzv/regularize.hpp"

namespace mzv {

ApproxValue operator+(const ApproxValue& a, const ApproxValue& b) {
    return {a.value + b.value, a.err + b.err};
}

ApproxValue operator-(const ApproxValue& a, const ApproxValue& b) {
    return {a.value - b.value, a.err + b.err};
}

ApproxValue operator*(const ApproxValue& a, const ApproxValue& b) {
    return {a.value * b.value, std::abs(a.value) * b.err + std::abs(b.value) * a.err + a.err * b.err};
}

ApproxValue operator*(Complex c, const ApproxValue& a) { return {c * a.value, std::abs(c) * a.err}; }

void EvalConfig::validate() const {
    if (!(tol >= 1e-14)) throw std::invalid_argument(fmt::format("tol must be >= 1e-14, got {}", tol));
    if (max_terms < 64) throw std::invalid_argument(fmt::format("max_terms must be >= 64, got {}", max_terms));
}

ApproxValue li_admissible(const MultiIndex& k, Complex z, const EvalConfig& cfg) {
    cfg.validate();
    if (k.parts.empty()) return {1.0, 0.0};
    for (int p : k.parts)
        if (p < 1) throw std::invalid_argument("multi-index parts must be positive");
    const double r = std::abs(z);
    if (!(r < 1.0)) throw DomainError(fmt::format("series diverges for |z| = {}", r));

    using LC = std::complex<long double>;
    const int m = k.depth();
    // inner[j] = sum_{n > n_j > ... > n_m > 0} prod_{i>=j} 1/n_i^{k_i}; inner[m] = 1
    std::vector<long double> inner(m + 1, 0.0L);
    inner[m] = 1.0L;
    const LC zl(z.real(), z.imag());
    LC power = 1.0L;
    LC sum = 0.0L;
    long double abs_sum = 0.0L;
    double tail = 0.0;
    for (long n = 1;; ++n) {
        if (n > cfg.max_terms)
            throw Unconverged(fmt::format("Li_{} at |z| = {}: tail {} after {} terms", k.str(), r, tail,
                                          cfg.max_terms));
        power *= zl;
        const long double nl = static_cast<long double>(n);
        // before the update inner[j] holds the sum over n_j < n
        const LC term = power * (inner[1] / std::pow(nl, k.parts[0]));
        sum += term;
        abs_sum += std::abs(term);
        for (int j = 1; j < m; ++j) inner[j] += inner[j + 1] / std::pow(nl, k.parts[j]);
        // every coefficient of the series is at most 1 in absolute value
        tail = std::pow(r, static_cast<double>(n + 1)) / (1.0 - r);
        if (n >= m && tail <= 0.5 * cfg.tol) break;
        if (r == 0.0) break;
    }
    const double rounding =
        4.0 * DBL_EPSILON * static_cast<double>(abs_sum) + 8.0 * LDBL_EPSILON * m * static_cast<double>(abs_sum);
    return {Complex(static_cast<double>(sum.real()), static_cast<double>(sum.imag())), tail + rounding};
}

namespace {

bool on_cut_one_inf(Complex z) { return z.imag() == 0.0 && z.real() >= 1.0; }
bool on_cut_zero(Complex z) { return z.imag() == 0.0 && z.real() <= 0.0; }

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace

Complex li_ones(int j, Complex z) {
    if (j < 0) throw std::invalid_argument("negative power");
    if (j == 0) return 1.0;
    if (on_cut_one_inf(z)) throw DomainError(fmt::format("log(1 - z) undefined on the cut at z = {}", z.real()));
    return std::pow(-std::log(1.0 - z), j) / factorial(j);
}

PolylogTable::PolylogTable(Complex z, EvalConfig cfg) : z_(z), cfg_(cfg) {
    cfg_.validate();
    if (!on_cut_zero(z_)) log_z_ = std::log(z_);
    if (!on_cut_one_inf(z_)) minus_log_1mz_ = -std::log(1.0 - z_);
}

const ApproxValue& PolylogTable::word(Word w) {
    if (auto it = cache_.find(w); it != cache_.end()) return it->second;
    ApproxValue v = evaluate(w);
    return cache_.emplace(w, v).first->second;
}

ApproxValue PolylogTable::poly(const NCPoly& p) {
    ApproxValue out;
    for (const auto& [w, c] : p) out = out + Complex(c.get_d()) * word(w);
    return out;
}

ApproxValue PolylogTable::evaluate(Word w) {
    if (w.empty()) return {1.0, 0.0};
    if (w.admissible()) return li_admissible(MultiIndex::from_word(w), z_, cfg_);

    const auto stripped = strip(w);
    if (stripped.trailing_x > 0 && on_cut_zero(z_))
        throw DomainError(fmt::format("Li({}; z) needs log z, undefined at z = {}", w.str(), z_.real()));
    if (stripped.leading_y > 0 && on_cut_one_inf(z_))
        throw DomainError(fmt::format("Li({}; z) needs log(1 - z), undefined at z = {}", w.str(), z_.real()));

    ApproxValue out;
    for (const auto& t : decompose(w).terms) {
        ApproxValue core;
        for (const auto& [u, c] : t.core) core = core + Complex(c.get_d()) * word(u);
        const Complex ly = t.i == 0 ? Complex(1.0) : std::pow(minus_log_1mz_, t.i) / factorial(t.i);
        const Complex lx = t.j == 0 ? Complex(1.0) : std::pow(log_z_, t.j) / factorial(t.j);
        const ApproxValue outer{ly * lx, 4.0 * DBL_EPSILON * (t.i + t.j) * std::abs(ly * lx)};
        out = out + outer * core;
    }
    return out;
}

ApproxValue li_word(Word w, Complex z, const EvalConfig& cfg) {
    PolylogTable table(z, cfg);
    return table.word(w);
}

ApproxValue li_poly(const NCPoly& p, Complex z, const EvalConfig& cfg) {
    PolylogTable table(z, cfg);
    return table.poly(p);
}

} // namespace mzv
