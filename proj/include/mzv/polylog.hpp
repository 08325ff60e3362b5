#pragma once

// Multiple polylogarithms Li(w; z) for arbitrary words w. Words of h^0 are
// summed as nested power series; every other word is reduced to those through
// the decomposition into y^i sh reg(...) sh x^j with Li(y^i) = (-log(1-z))^i/i!
// and Li(x^j) = (log z)^j/j!.

#include <complex>
#include <unordered_map>

#include "mzv/words.hpp"

namespace mzv {

using Complex = std::complex<double>;

/// A value with a claimed bound on its absolute error.
struct ApproxValue {
    Complex value{};
    double err = 0.0;
};

ApproxValue operator+(const ApproxValue& a, const ApproxValue& b);
ApproxValue operator-(const ApproxValue& a, const ApproxValue& b);
ApproxValue operator*(const ApproxValue& a, const ApproxValue& b);
ApproxValue operator*(Complex c, const ApproxValue& a);

struct EvalConfig {
    double tol = 1e-14;      ///< target absolute error
    int max_terms = 1000000; ///< series cutoff guard

    /// Throws std::invalid_argument unless tol >= 1e-14 and max_terms >= 64.
    void validate() const;
};

/// Nested series sum_{n_1 > ... > n_m > 0} z^{n_1} / (n_1^{k_1} ... n_m^{k_m})
/// for |z| < 1, by prefix sums in O(depth * terms). Any k_1 >= 1 is accepted.
ApproxValue li_admissible(const MultiIndex& k, Complex z, const EvalConfig& cfg = {});

/// Li(y^j; z) = (-log(1-z))^j / j!, principal branch, z not on [1, inf).
Complex li_ones(int j, Complex z);

ApproxValue li_word(Word w, Complex z, const EvalConfig& cfg = {});
ApproxValue li_poly(const NCPoly& p, Complex z, const EvalConfig& cfg = {});

/// Li(.; z) at a fixed argument, caching every word evaluated so far. Not
/// thread safe; use one table per thread.
class PolylogTable {
public:
    explicit PolylogTable(Complex z, EvalConfig cfg = {});

    Complex z() const { return z_; }
    const EvalConfig& config() const { return cfg_; }

    const ApproxValue& word(Word w);
    ApproxValue poly(const NCPoly& p);

private:
    ApproxValue evaluate(Word w);

    Complex z_;
    EvalConfig cfg_;
    Complex log_z_{};
    Complex minus_log_1mz_{};
    std::unordered_map<Word, ApproxValue, WordHash> cache_;
};

} // namespace mzv
