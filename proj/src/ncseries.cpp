#include "mzv/ncseries.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

#include "mzv/errors.hpp"

namespace mzv {

TruncSeries::TruncSeries(int order) : order_(order) {
    if (order < 0 || order > 20) throw std::invalid_argument(fmt::format("series order {} out of range", order));
    blocks_.resize(order + 1);
    for (int n = 0; n <= order; ++n) blocks_[n].assign(std::size_t{1} << n, Complex{});
}

TruncSeries TruncSeries::scalar(Complex c, int order) {
    TruncSeries s(order);
    s.blocks_[0][0] = c;
    return s;
}

TruncSeries TruncSeries::letter(Letter l, int order) {
    TruncSeries s(order);
    if (order >= 1) s.blocks_[1][static_cast<int>(l)] = 1.0;
    return s;
}

Complex TruncSeries::coeff(Word w) const {
    if (w.weight() > order_)
        throw std::out_of_range(fmt::format("word {} exceeds series order {}", w.str(), order_));
    return blocks_[w.weight()][w.bits()];
}

void TruncSeries::set(Word w, Complex c) { at(w) = c; }

Complex& TruncSeries::at(Word w) {
    if (w.weight() > order_)
        throw std::out_of_range(fmt::format("word {} exceeds series order {}", w.str(), order_));
    return blocks_[w.weight()][w.bits()];
}

void TruncSeries::check_same_order(const TruncSeries& o) const {
    if (o.order_ != order_) throw std::invalid_argument(fmt::format("series orders differ: {} vs {}", order_, o.order_));
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
    check_same_order(o);
    for (int n = 0; n <= order_; ++n)
        for (std::size_t i = 0; i < blocks_[n].size(); ++i) blocks_[n][i] += o.blocks_[n][i];
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
    check_same_order(o);
    for (int n = 0; n <= order_; ++n)
        for (std::size_t i = 0; i < blocks_[n].size(); ++i) blocks_[n][i] -= o.blocks_[n][i];
    return *this;
}

TruncSeries& TruncSeries::operator*=(Complex c) {
    for (auto& b : blocks_)
        for (auto& v : b) v *= c;
    return *this;
}

double TruncSeries::distance(const TruncSeries& o) const {
    check_same_order(o);
    double d = 0.0;
    for (int n = 0; n <= order_; ++n)
        for (std::size_t i = 0; i < blocks_[n].size(); ++i) d = std::max(d, std::abs(blocks_[n][i] - o.blocks_[n][i]));
    return d;
}

std::string TruncSeries::render(double threshold) const {
    std::string out;
    for (int n = 0; n <= order_; ++n) {
        for (std::size_t i = 0; i < blocks_[n].size(); ++i) {
            const Complex c = blocks_[n][i];
            if (n > 0 && std::abs(c) <= threshold) continue;
            std::string name = n == 0 ? "1" : Word::from_bits(i, n).str();
            for (auto& ch : name) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
            out += fmt::format("{}: {:.15g}{:+.15g}i\n", name, c.real(), c.imag());
        }
    }
    return out;
}

TruncSeries mul(const TruncSeries& a, const TruncSeries& b) {
    if (a.order() != b.order()) throw std::invalid_argument("series orders differ");
    const int N = a.order();
    TruncSeries out(N);
    for (int p = 0; p <= N; ++p) {
        const auto& ap = a.block(p);
        for (int q = 0; p + q <= N; ++q) {
            const auto& bq = b.block(q);
            auto& o = out.block(p + q);
            for (std::size_t u = 0; u < ap.size(); ++u) {
                if (ap[u] == Complex{}) continue;
                const std::size_t base = u << q;
                for (std::size_t v = 0; v < bq.size(); ++v) o[base | v] += ap[u] * bq[v];
            }
        }
    }
    return out;
}

TruncSeries invert(const TruncSeries& a) {
    const Complex a0 = a.block(0)[0];
    if (a0 == Complex{}) throw ZeroConstantTerm("series with zero scalar part is not invertible");
    const int N = a.order();
    TruncSeries b(N);
    b.block(0)[0] = 1.0 / a0;
    // b_n = -a0^{-1} sum_{k=1..n} a_k b_{n-k}, where a_k b_{n-k} is the concatenation product
    for (int n = 1; n <= N; ++n) {
        auto& bn = b.block(n);
        for (int k = 1; k <= n; ++k) {
            const auto& ak = a.block(k);
            const auto& bm = b.block(n - k);
            for (std::size_t u = 0; u < ak.size(); ++u) {
                if (ak[u] == Complex{}) continue;
                const std::size_t base = u << (n - k);
                for (std::size_t v = 0; v < bm.size(); ++v) bn[base | v] += ak[u] * bm[v];
            }
        }
        for (auto& c : bn) c *= -1.0 / a0;
    }
    return b;
}

TruncSeries exp_letter(Complex a, Letter l, int order) {
    TruncSeries s(order);
    Complex term = 1.0;
    for (int n = 0; n <= order; ++n) {
        if (n > 0) term *= a / static_cast<double>(n);
        s.set(Word::power(l, n), term);
    }
    return s;
}

LetterMap LetterMap::pushforward(Mobius f) {
    const LetterMatrix A = mobius_matrix(f);
    LetterMap m;
    m.image_of_X = {static_cast<double>(A[0][0]), static_cast<double>(A[0][1])};
    m.image_of_Y = {static_cast<double>(A[1][0]), static_cast<double>(A[1][1])};
    return m;
}

TruncSeries subst(const TruncSeries& a, const LetterMap& m) {
    const int N = a.order();
    TruncSeries out(N);
    // M[source letter][target letter]
    const Complex M[2][2] = {{m.image_of_X[0], m.image_of_X[1]}, {m.image_of_Y[0], m.image_of_Y[1]}};
    out.block(0)[0] = a.block(0)[0];
    for (int n = 1; n <= N; ++n) {
        // expand letter by letter: cur is indexed by (processed prefix image, remaining source suffix)
        std::vector<Complex> cur = a.block(n);
        for (int pos = 0; pos < n; ++pos) {
            // the letter at position pos is bit (n-1-pos); swap it from source to target basis
            const int bit = n - 1 - pos;
            std::vector<Complex> next(cur.size());
            for (std::size_t idx = 0; idx < cur.size(); ++idx) {
                if (cur[idx] == Complex{}) continue;
                const int src = static_cast<int>((idx >> bit) & 1u);
                const std::size_t cleared = idx & ~(std::size_t{1} << bit);
                next[cleared] += cur[idx] * M[src][0];
                next[cleared | (std::size_t{1} << bit)] += cur[idx] * M[src][1];
            }
            cur = std::move(next);
        }
        out.block(n) = std::move(cur);
    }
    return out;
}

} // namespace mzv
