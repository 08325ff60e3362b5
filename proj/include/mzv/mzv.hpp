#pragma once

// Multiple zeta values. The main evaluator uses the connection formula at
// z = 1/2: zeta-hat(reg w) = sum_{w1 w2 = w} Li(tau(w1); 1/2) Li(w2; 1/2), so
// every factor is a geometrically convergent series.

#include <unordered_map>

#include "mzv/polylog.hpp"

namespace mzv {

/// Truncated nested sum over n_1 <= cutoff plus a leading-order estimate of
/// the discarded part. err covers the asymptotic remainder of that estimate.
/// Throws NonAdmissible unless k_1 >= 2.
ApproxValue zeta_direct(const MultiIndex& k, long cutoff = 1000000);

/// Memoized zeta-hat(reg w). Not thread safe; use one evaluator per thread.
class MzvEvaluator {
public:
    explicit MzvEvaluator(EvalConfig cfg = {});

    const ApproxValue& word(Word w);
    ApproxValue poly(const NCPoly& p);
    /// Throws NonAdmissible unless k is admissible.
    ApproxValue index(const MultiIndex& k);

    PolylogTable& half() { return half_; }
    const EvalConfig& config() const { return cfg_; }

private:
    EvalConfig cfg_;
    PolylogTable half_;
    std::unordered_map<Word, ApproxValue, WordHash> cache_;
};

ApproxValue zeta_word(Word w, const EvalConfig& cfg = {});
ApproxValue zeta_poly(const NCPoly& p, const EvalConfig& cfg = {});
ApproxValue zeta(const MultiIndex& k, const EvalConfig& cfg = {});

/// S(n, r): the sum of all MZVs of weight n and depth r. Throws DomainError
/// unless n >= 2 and 1 <= r <= n - 1.
ApproxValue sum_weight_depth(int n, int r, MzvEvaluator& mzv);
ApproxValue sum_weight_depth(int n, int r, const EvalConfig& cfg = {});

/// Li(v; 1 - t) for 0 < t <= 1/2 by the connection formula applied to tau(v),
/// which expresses it through Li(.; t) and shorter words at 1 - t.
ApproxValue li_near_one(Word v, double t, MzvEvaluator& mzv);

} // namespace mzv
