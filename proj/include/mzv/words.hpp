#pragma once

// Exact arithmetic in the free algebra Q<x,y>: words, polynomials with
// rational coefficients, the shuffle product, and the letter maps induced by
// the six linear fractional transformations permuting {0, 1, infinity}.

#include <array>
#include <compare>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace mzv {

enum class Letter : std::uint8_t { x = 0, y = 1 };

/// A word over {x, y}, packed as bits (x = 0, y = 1) with the first letter in
/// the most significant position. The empty word is the unit 1.
class Word {
public:
    static constexpr int max_weight = 62;

    constexpr Word() = default;
    static Word from_bits(std::uint64_t bits, int weight);
    /// Parses "xxy"; "1" and "" give the empty word.
    static Word parse(std::string_view text);
    static Word letter(Letter l) { return from_bits(static_cast<std::uint64_t>(l), 1); }
    static Word power(Letter l, int n);

    int weight() const { return len_; }
    bool empty() const { return len_ == 0; }
    std::uint64_t bits() const { return bits_; }
    Letter operator[](int i) const {
        return static_cast<Letter>((bits_ >> (len_ - 1 - i)) & 1u);
    }
    Letter front() const { return (*this)[0]; }
    Letter back() const { return (*this)[len_ - 1]; }

    Word prefix(int n) const { return from_bits(bits_ >> (len_ - n), n); }
    Word suffix(int n) const {
        return from_bits(n == 0 ? 0 : bits_ & ((std::uint64_t{1} << n) - 1), n);
    }
    Word concat(Word v) const;
    Word reversed() const;
    Word swapped() const { return from_bits(bits_ ^ mask(), len_); }

    /// Element of the basis of h^0 = Q1 + x h y.
    bool admissible() const { return len_ == 0 || (front() == Letter::x && back() == Letter::y); }
    /// Element of the basis of h^1 = Q1 + h y.
    bool in_h1() const { return len_ == 0 || back() == Letter::y; }

    std::string str() const;

    friend bool operator==(Word a, Word b) = default;
    /// Graded lexicographic order with x < y.
    friend std::strong_ordering operator<=>(Word a, Word b) {
        if (auto c = a.len_ <=> b.len_; c != 0) return c;
        return a.bits_ <=> b.bits_;
    }

private:
    std::uint64_t mask() const { return len_ == 0 ? 0 : ((std::uint64_t{1} << len_) - 1); }
    std::uint64_t bits_ = 0;
    std::uint8_t len_ = 0;
};

struct WordHash {
    std::size_t operator()(Word w) const noexcept {
        return std::hash<std::uint64_t>{}(w.bits() * 131u + static_cast<std::uint64_t>(w.weight()));
    }
};

/// All words of the given weight, in graded lexicographic order.
std::vector<Word> words_of_weight(int weight);
/// All words of weight 0..max_weight.
std::vector<Word> words_up_to(int max_weight);

using Rational = mpq_class;

/// A finitely supported map Word -> Q. Zero coefficients are never stored.
class NCPoly {
public:
    using Terms = std::map<Word, Rational>;

    NCPoly() = default;
    NCPoly(Word w) { terms_.emplace(w, 1); }
    NCPoly(Word w, Rational c);
    static NCPoly one() { return NCPoly(Word{}); }
    /// Parses a signed sum such as "2*xyy + yxy - xy" or "-1/2*x".
    static NCPoly parse(std::string_view text);

    void add(Word w, const Rational& c);
    Rational coeff(Word w) const;
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }
    int max_weight() const;
    NCPoly homogeneous_part(int weight) const;

    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    NCPoly& operator*=(const Rational& c);
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(NCPoly a, const Rational& c) { return a *= c; }
    friend NCPoly operator*(const Rational& c, NCPoly a) { return a *= c; }
    NCPoly operator-() const { return *this * Rational(-1); }
    friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }

    std::string str() const;

private:
    Terms terms_;
};

NCPoly shuffle(Word u, Word v);
NCPoly shuffle(const NCPoly& u, const NCPoly& v);
NCPoly concat(const NCPoly& u, const NCPoly& v);

/// Anti-involution x -> -x, y -> -y: reverses each word, sign (-1)^weight.
NCPoly antipode(const NCPoly& p);
/// Anti-involution x -> y, y -> x (reverse and swap letters).
Word tau(Word w);
NCPoly tau(const NCPoly& p);

/// Compositions (k_1, ..., k_m) of positive integers, bijective with the
/// nonempty words of h y through x^{k_1-1} y ... x^{k_m-1} y.
struct MultiIndex {
    std::vector<int> parts;

    int weight() const;
    int depth() const { return static_cast<int>(parts.size()); }
    bool admissible() const { return !parts.empty() && parts.front() >= 2; }
    Word to_word() const;
    /// Throws std::invalid_argument unless w is nonempty and ends in y.
    static MultiIndex from_word(Word w);
    /// Parses "3,1".
    static MultiIndex parse(std::string_view text);
    std::string str() const;
    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

/// Compositions of `weight` into exactly `length` positive parts, in
/// lexicographic order.
std::vector<MultiIndex> compositions(int weight, int length);

/// The six linear fractional maps preserving {0, 1, infinity}.
enum class Mobius { identity, one_minus_z, inverse, z_over_z_minus_1, one_over_one_minus_z, z_minus_1_over_z };

inline constexpr Mobius all_mobius[] = {Mobius::identity,       Mobius::one_minus_z,
                                        Mobius::inverse,        Mobius::z_over_z_minus_1,
                                        Mobius::one_over_one_minus_z, Mobius::z_minus_1_over_z};

std::string_view mobius_label(Mobius f);
/// f o g as functions, i.e. z -> f(g(z)).
Mobius compose(Mobius f, Mobius g);
Mobius inverse(Mobius f);
std::complex<double> apply(Mobius f, std::complex<double> z);

/// Integer matrix A(f) with (f^*(x), f^*(y)) = (x, y) A(f) and
/// (f_*(X), f_*(Y))^T = A(f) (X, Y)^T.
using LetterMatrix = std::array<std::array<int, 2>, 2>;
LetterMatrix mobius_matrix(Mobius f);

/// Pull-back action f^* on h: each letter is replaced by its degree-one image.
struct SubstRule {
    NCPoly image_of_x;
    NCPoly image_of_y;
    Mobius label = Mobius::identity;

    static SubstRule pullback(Mobius f);
};

NCPoly letter_subst(const NCPoly& p, const SubstRule& r);

} // namespace mzv
