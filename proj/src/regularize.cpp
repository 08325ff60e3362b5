#include "mzv/regularize.hpp"

#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace mzv {

StrippedWord strip(Word w) {
    StrippedWord s;
    const int len = w.weight();
    int lead = 0;
    while (lead < len && w[lead] == Letter::y) ++lead;
    int trail = 0;
    while (trail < len - lead && w[len - 1 - trail] == Letter::x) ++trail;
    s.leading_y = lead;
    s.trailing_x = trail;
    s.core = w.suffix(len - lead).prefix(len - lead - trail);
    return s;
}

namespace {

NCPoly compute_reg(Word w) {
    const auto [m, core, n] = strip(w);
    if (m == 0 && n == 0) return NCPoly(w);
    NCPoly out;
    for (int i = 0; i <= m; ++i) {
        const NCPoly left(Word::power(Letter::y, i));
        for (int j = 0; j <= n; ++j) {
            const Word middle = Word::power(Letter::y, m - i).concat(core).concat(Word::power(Letter::x, n - j));
            NCPoly term = shuffle(shuffle(left, NCPoly(middle)), NCPoly(Word::power(Letter::x, j)));
            if ((i + j) % 2) term *= -1;
            out += term;
        }
    }
    return out;
}

struct RegCache {
    std::shared_mutex mutex;
    // node-based map: references stay valid across rehashing
    std::unordered_map<Word, std::unique_ptr<NCPoly>, WordHash> table;
};

RegCache& cache() {
    static RegCache c;
    return c;
}

} // namespace

const NCPoly& reg(Word w) {
    auto& c = cache();
    {
        std::shared_lock lock(c.mutex);
        if (auto it = c.table.find(w); it != c.table.end()) return *it->second;
    }
    auto value = std::make_unique<NCPoly>(compute_reg(w));
    std::unique_lock lock(c.mutex);
    auto [it, inserted] = c.table.try_emplace(w, std::move(value));
    return *it->second;
}

NCPoly reg(const NCPoly& p) {
    NCPoly out;
    for (const auto& [w, c] : p) out += reg(w) * c;
    return out;
}

Decomposition decompose(Word w) {
    const auto [m, core, n] = strip(w);
    Decomposition d;
    for (int i = 0; i <= m; ++i) {
        for (int j = 0; j <= n; ++j) {
            const Word inner = Word::power(Letter::y, m - i).concat(core).concat(Word::power(Letter::x, n - j));
            const NCPoly& r = reg(inner);
            if (!r.is_zero()) d.terms.push_back({i, j, r});
        }
    }
    return d;
}

NCPoly Decomposition::reconstruct() const {
    NCPoly out;
    for (const auto& t : terms)
        out += shuffle(shuffle(NCPoly(Word::power(Letter::y, t.i)), t.core), NCPoly(Word::power(Letter::x, t.j)));
    return out;
}

} // namespace mzv
