#include "mzv/words.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <unordered_map>

namespace mzv {

Word Word::from_bits(std::uint64_t bits, int weight) {
    if (weight < 0 || weight > max_weight) throw std::invalid_argument("word weight out of range");
    Word w;
    w.len_ = static_cast<std::uint8_t>(weight);
    w.bits_ = bits & w.mask();
    return w;
}

Word Word::parse(std::string_view text) {
    if (text.empty() || text == "1") return Word{};
    if (static_cast<int>(text.size()) > max_weight) throw std::invalid_argument("word too long");
    std::uint64_t bits = 0;
    for (char c : text) {
        bits <<= 1;
        if (c == 'y' || c == 'Y')
            bits |= 1;
        else if (c != 'x' && c != 'X')
            throw std::invalid_argument("invalid letter in word: " + std::string(text));
    }
    return from_bits(bits, static_cast<int>(text.size()));
}

Word Word::power(Letter l, int n) {
    return from_bits(l == Letter::y ? ~std::uint64_t{0} : 0, n);
}

Word Word::concat(Word v) const {
    if (len_ + v.len_ > max_weight) throw std::length_error("word too long");
    return from_bits((bits_ << v.len_) | v.bits_, len_ + v.len_);
}

Word Word::reversed() const {
    std::uint64_t r = 0;
    std::uint64_t b = bits_;
    for (int i = 0; i < len_; ++i) {
        r = (r << 1) | (b & 1u);
        b >>= 1;
    }
    return from_bits(r, len_);
}

std::string Word::str() const {
    if (len_ == 0) return "1";
    std::string s(len_, 'x');
    for (int i = 0; i < len_; ++i)
        if ((*this)[i] == Letter::y) s[i] = 'y';
    return s;
}

std::vector<Word> words_of_weight(int weight) {
    std::vector<Word> out;
    out.reserve(std::size_t{1} << weight);
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << weight); ++b) out.push_back(Word::from_bits(b, weight));
    return out;
}

std::vector<Word> words_up_to(int max_weight) {
    std::vector<Word> out;
    for (int n = 0; n <= max_weight; ++n) {
        auto ws = words_of_weight(n);
        out.insert(out.end(), ws.begin(), ws.end());
    }
    return out;
}

// ---------------------------------------------------------------------------
// NCPoly

NCPoly::NCPoly(Word w, Rational c) {
    if (c != 0) terms_.emplace(w, std::move(c));
}

void NCPoly::add(Word w, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational NCPoly::coeff(Word w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

int NCPoly::max_weight() const { return terms_.empty() ? -1 : terms_.rbegin()->first.weight(); }

NCPoly NCPoly::homogeneous_part(int weight) const {
    NCPoly out;
    for (const auto& [w, c] : terms_)
        if (w.weight() == weight) out.terms_.emplace(w, c);
    return out;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

NCPoly& NCPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
}

std::string NCPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        Rational mag = abs(c);
        if (first)
            out += (c < 0 ? "-" : "");
        else
            out += (c < 0 ? " - " : " + ");
        first = false;
        if (mag != 1)
            out += mag.get_str() + (w.empty() ? "" : "*" + w.str());
        else
            out += w.str();
    }
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

Rational parse_rational(std::string_view s) {
    Rational r;
    if (r.set_str(std::string(s), 10) != 0) throw std::invalid_argument("bad coefficient: " + std::string(s));
    r.canonicalize();
    return r;
}

bool is_number(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '/'; });
}

} // namespace

NCPoly NCPoly::parse(std::string_view text) {
    NCPoly out;
    text = trim(text);
    if (text.empty()) throw std::invalid_argument("empty polynomial");
    if (text == "0") return out;
    std::size_t pos = 0;
    bool first = true;
    while (pos < text.size()) {
        int sign = 1;
        auto rest = trim(text.substr(pos));
        pos = text.size() - rest.size();
        if (rest.front() == '+' || rest.front() == '-') {
            sign = rest.front() == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' in polynomial: " + std::string(text));
        }
        first = false;
        std::size_t next = text.find_first_of("+-", pos);
        auto term = trim(text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
        if (term.empty()) throw std::invalid_argument("empty term in polynomial: " + std::string(text));
        Rational c = 1;
        Word w;
        if (auto star = term.find('*'); star != std::string_view::npos) {
            c = parse_rational(trim(term.substr(0, star)));
            w = Word::parse(trim(term.substr(star + 1)));
        } else if (is_number(term) && term != "1") {
            c = parse_rational(term);
        } else {
            w = Word::parse(term);
        }
        out.add(w, sign * c);
        pos = next == std::string_view::npos ? text.size() : next;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Products

namespace {

using Counts = std::unordered_map<Word, std::uint64_t, WordHash>;

// l1 w1 sh l2 w2 = l1 (w1 sh l2 w2) + l2 (l1 w1 sh w2), expanded depth first
// with the common prefix carried along.
void shuffle_rec(Word u, Word v, Word prefix, Counts& out) {
    if (u.empty()) {
        ++out[prefix.concat(v)];
        return;
    }
    if (v.empty()) {
        ++out[prefix.concat(u)];
        return;
    }
    shuffle_rec(u.suffix(u.weight() - 1), v, prefix.concat(u.prefix(1)), out);
    shuffle_rec(u, v.suffix(v.weight() - 1), prefix.concat(v.prefix(1)), out);
}

} // namespace

NCPoly shuffle(Word u, Word v) {
    Counts counts;
    shuffle_rec(u, v, Word{}, counts);
    NCPoly out;
    for (const auto& [w, n] : counts) out.add(w, Rational(static_cast<unsigned long>(n)));
    return out;
}

NCPoly shuffle(const NCPoly& u, const NCPoly& v) {
    NCPoly out;
    for (const auto& [a, ca] : u) {
        for (const auto& [b, cb] : v) {
            Counts counts;
            shuffle_rec(a, b, Word{}, counts);
            Rational c = ca * cb;
            for (const auto& [w, n] : counts) out.add(w, c * static_cast<unsigned long>(n));
        }
    }
    return out;
}

NCPoly concat(const NCPoly& u, const NCPoly& v) {
    NCPoly out;
    for (const auto& [a, ca] : u)
        for (const auto& [b, cb] : v) out.add(a.concat(b), ca * cb);
    return out;
}

NCPoly antipode(const NCPoly& p) {
    NCPoly out;
    for (const auto& [w, c] : p) out.add(w.reversed(), w.weight() % 2 ? Rational(-c) : c);
    return out;
}

Word tau(Word w) { return w.reversed().swapped(); }

NCPoly tau(const NCPoly& p) {
    NCPoly out;
    for (const auto& [w, c] : p) out.add(tau(w), c);
    return out;
}

// ---------------------------------------------------------------------------
// MultiIndex

int MultiIndex::weight() const {
    int s = 0;
    for (int k : parts) s += k;
    return s;
}

Word MultiIndex::to_word() const {
    Word w;
    for (int k : parts) {
        if (k < 1) throw std::invalid_argument("multi-index parts must be positive");
        w = w.concat(Word::power(Letter::x, k - 1)).concat(Word::letter(Letter::y));
    }
    return w;
}

MultiIndex MultiIndex::from_word(Word w) {
    if (w.empty() || w.back() != Letter::y) throw std::invalid_argument("word must end in y: " + w.str());
    MultiIndex k;
    int run = 1;
    for (int i = 0; i < w.weight(); ++i) {
        if (w[i] == Letter::x) {
            ++run;
        } else {
            k.parts.push_back(run);
            run = 1;
        }
    }
    return k;
}

MultiIndex MultiIndex::parse(std::string_view text) {
    MultiIndex k;
    text = trim(text);
    if (text.empty()) throw std::invalid_argument("empty multi-index");
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        auto item = trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
        if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw std::invalid_argument("bad multi-index: " + std::string(text));
        int v = std::stoi(std::string(item));
        if (v < 1) throw std::invalid_argument("multi-index parts must be positive");
        k.parts.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return k;
}

std::string MultiIndex::str() const {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts[i]);
    }
    return s;
}

std::vector<MultiIndex> compositions(int weight, int length) {
    std::vector<MultiIndex> out;
    if (length < 1 || weight < length) return out;
    std::vector<int> parts(length, 1);
    // Enumerate through the positions of length-1 bars among weight-1 gaps.
    std::function<void(int, int, int)> rec = [&](int slot, int remaining, int slots_left) {
        if (slots_left == 1) {
            parts[slot] = remaining;
            out.push_back(MultiIndex{parts});
            return;
        }
        for (int v = 1; v <= remaining - (slots_left - 1); ++v) {
            parts[slot] = v;
            rec(slot + 1, remaining - v, slots_left - 1);
        }
    };
    rec(0, weight, length);
    return out;
}

// ---------------------------------------------------------------------------
// Linear fractional maps

std::string_view mobius_label(Mobius f) {
    switch (f) {
    case Mobius::identity: return "z";
    case Mobius::one_minus_z: return "1-z";
    case Mobius::inverse: return "1/z";
    case Mobius::z_over_z_minus_1: return "z/(z-1)";
    case Mobius::one_over_one_minus_z: return "1/(1-z)";
    case Mobius::z_minus_1_over_z: return "(z-1)/z";
    }
    return "?";
}

std::complex<double> apply(Mobius f, std::complex<double> z) {
    switch (f) {
    case Mobius::identity: return z;
    case Mobius::one_minus_z: return 1.0 - z;
    case Mobius::inverse: return 1.0 / z;
    case Mobius::z_over_z_minus_1: return z / (z - 1.0);
    case Mobius::one_over_one_minus_z: return 1.0 / (1.0 - z);
    case Mobius::z_minus_1_over_z: return (z - 1.0) / z;
    }
    return z;
}

namespace {

Mobius identify(std::complex<double> probe_in, std::complex<double> value) {
    for (Mobius h : all_mobius)
        if (std::abs(apply(h, probe_in) - value) < 1e-9) return h;
    throw std::logic_error("composition left the group of six maps");
}

constexpr std::complex<double> probe{0.31, 0.17};

} // namespace

Mobius compose(Mobius f, Mobius g) { return identify(probe, apply(f, apply(g, probe))); }

Mobius inverse(Mobius f) {
    for (Mobius h : all_mobius)
        if (compose(f, h) == Mobius::identity) return h;
    throw std::logic_error("no inverse");
}

// Columns are the images of x and y; rows are those of X and Y.
LetterMatrix mobius_matrix(Mobius f) {
    switch (f) {
    case Mobius::identity: return {{{1, 0}, {0, 1}}};
    case Mobius::one_minus_z: return {{{0, -1}, {-1, 0}}};
    case Mobius::inverse: return {{{-1, 1}, {0, 1}}};
    case Mobius::z_over_z_minus_1: return {{{1, 0}, {1, -1}}};
    case Mobius::one_over_one_minus_z: return {{{0, -1}, {1, -1}}};
    case Mobius::z_minus_1_over_z: return {{{-1, 1}, {-1, 0}}};
    }
    return {};
}

SubstRule SubstRule::pullback(Mobius f) {
    const auto a = mobius_matrix(f);
    const Word x = Word::letter(Letter::x), y = Word::letter(Letter::y);
    SubstRule r;
    r.label = f;
    // f^*(x) = a00 x + a10 y, f^*(y) = a01 x + a11 y
    r.image_of_x = NCPoly(x, a[0][0]) + NCPoly(y, a[1][0]);
    r.image_of_y = NCPoly(x, a[0][1]) + NCPoly(y, a[1][1]);
    return r;
}

NCPoly letter_subst(const NCPoly& p, const SubstRule& r) {
    const Word x = Word::letter(Letter::x), y = Word::letter(Letter::y);
    for (const NCPoly* img : {&r.image_of_x, &r.image_of_y})
        for (const auto& [w, c] : *img)
            if (w.weight() != 1) throw std::invalid_argument("substitution images must be linear in the letters");
    // m[letter][target letter]
    const Rational m[2][2] = {{r.image_of_x.coeff(x), r.image_of_x.coeff(y)},
                              {r.image_of_y.coeff(x), r.image_of_y.coeff(y)}};
    NCPoly out;
    for (const auto& [w, c] : p) {
        const int n = w.weight();
        for (std::uint64_t t = 0; t < (std::uint64_t{1} << n); ++t) {
            const Word target = Word::from_bits(t, n);
            Rational coef = c;
            for (int i = 0; i < n && coef != 0; ++i)
                coef *= m[static_cast<int>(w[i])][static_cast<int>(target[i])];
            out.add(target, coef);
        }
    }
    return out;
}

} // namespace mzv
