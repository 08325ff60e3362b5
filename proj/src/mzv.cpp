#include "mzv/mzv.hpp"

#include <cfloat>
#include <cmath>
#include <vector>

#include <fmt/format.h>

#include "mzv/errors.hpp"
#include "mzv/regularize.hpp"

namespace mzv {

namespace {

long double inv_pow(long n, int k) {
    const long double inv = 1.0L / static_cast<long double>(n);
    long double r = 1.0L;
    for (int i = 0; i < k; ++i) r *= inv;
    return r;
}

} // namespace

ApproxValue zeta_direct(const MultiIndex& k, long cutoff) {
    if (!k.admissible()) throw NonAdmissible(fmt::format("zeta({}) diverges", k.str()));
    if (cutoff < 1) throw std::invalid_argument("cutoff must be positive");
    const int m = k.depth();
    // inner[j] = sum over cutoff >= n_{j+1} > ... > n_m > 0 (0-based parts), inner[m] = 1
    std::vector<long double> inner(m + 1, 0.0L);
    inner[m] = 1.0L;
    long double head = 0.0L;
    for (long n = 1; n <= cutoff; ++n) {
        head += inner[1] * inv_pow(n, k.parts[0]);
        for (int j = 1; j < m; ++j) inner[j] += inner[j + 1] * inv_pow(n, k.parts[j]);
    }
    // Discarded tuples have n_1 > ... > n_s > cutoff >= n_{s+1}. Their n_1..n_s
    // block is replaced by its integral from cutoff + 1/2, which is
    // c^{s-K_s} / prod_{i<=s} (K_i - i) with K_i the partial weights.
    const long double c = static_cast<long double>(cutoff) + 0.5L;
    long double tail = 0.0L;
    long double tail_err = 0.0L;
    int partial = 0;
    long double denom = 1.0L;
    for (int s = 1; s <= m; ++s) {
        partial += k.parts[s - 1];
        denom *= static_cast<long double>(partial - s);
        const long double block = std::pow(c, static_cast<long double>(s - partial)) / denom;
        const long double term = block * inner[s];
        tail += term;
        tail_err += term * 2.0L * partial * partial / static_cast<long double>(cutoff);
    }
    const double rounding = static_cast<double>(LDBL_EPSILON * m * cutoff * head) + 1e-16 * static_cast<double>(head);
    return {static_cast<double>(head + tail), static_cast<double>(tail_err) + rounding};
}

MzvEvaluator::MzvEvaluator(EvalConfig cfg) : cfg_(cfg), half_(0.5, cfg) {}

const ApproxValue& MzvEvaluator::word(Word w) {
    if (auto it = cache_.find(w); it != cache_.end()) return it->second;
    ApproxValue sum;
    const int n = w.weight();
    for (int p = 0; p <= n; ++p) sum = sum + half_.word(tau(w.prefix(p))) * half_.word(w.suffix(n - p));
    // the value is real; drop the imaginary roundoff
    sum.err += std::abs(sum.value.imag());
    sum.value = sum.value.real();
    return cache_.emplace(w, sum).first->second;
}

ApproxValue MzvEvaluator::poly(const NCPoly& p) {
    ApproxValue out;
    for (const auto& [w, c] : p) out = out + Complex(c.get_d()) * word(w);
    return out;
}

ApproxValue MzvEvaluator::index(const MultiIndex& k) {
    if (!k.admissible()) throw NonAdmissible(fmt::format("zeta({}) diverges", k.str()));
    return word(k.to_word());
}

ApproxValue zeta_word(Word w, const EvalConfig& cfg) { return MzvEvaluator(cfg).word(w); }

ApproxValue zeta_poly(const NCPoly& p, const EvalConfig& cfg) { return MzvEvaluator(cfg).poly(p); }

ApproxValue zeta(const MultiIndex& k, const EvalConfig& cfg) { return MzvEvaluator(cfg).index(k); }

ApproxValue sum_weight_depth(int n, int r, MzvEvaluator& mzv) {
    if (n < 2 || r < 1 || r >= n) throw DomainError(fmt::format("S({}, {}) needs n >= 2 and 1 <= r <= n-1", n, r));
    ApproxValue out;
    for (const auto& k : compositions(n, r))
        if (k.admissible()) out = out + mzv.index(k);
    return out;
}

ApproxValue sum_weight_depth(int n, int r, const EvalConfig& cfg) {
    MzvEvaluator mzv(cfg);
    return sum_weight_depth(n, r, mzv);
}

ApproxValue li_near_one(Word v, double t, MzvEvaluator& mzv) {
    if (!(t > 0.0 && t <= 0.5)) throw DomainError(fmt::format("li_near_one needs 0 < t <= 1/2, got {}", t));
    PolylogTable at_t(t, mzv.config());
    const int n = v.weight();
    // near[p] = Li(suffix_p(v); 1 - t)
    std::vector<ApproxValue> near(n + 1);
    near[0] = {1.0, 0.0};
    for (int p = 1; p <= n; ++p) {
        const Word s = v.suffix(p);
        const Word dual = tau(s);
        ApproxValue acc = mzv.word(dual);
        for (int q = 0; q < p; ++q) acc = acc - near[q] * at_t.word(dual.suffix(p - q));
        near[p] = acc;
    }
    return near[n];
}

} // namespace mzv
