#pragma once

// Truncated noncommutative power series in X, Y with complex coefficients.
// Coefficients of weight n are stored densely, indexed by the packed bits of
// the word (X = 0, Y = 1, first letter most significant), as in Word.

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "mzv/words.hpp"

namespace mzv {

using Complex = std::complex<double>;

class TruncSeries {
public:
    explicit TruncSeries(int order);
    static TruncSeries one(int order) { return scalar(1.0, order); }
    static TruncSeries scalar(Complex c, int order);
    static TruncSeries letter(Letter l, int order);

    int order() const { return order_; }

    /// Throws std::out_of_range if weight(w) > order.
    Complex coeff(Word w) const;
    void set(Word w, Complex c);
    Complex& at(Word w);
    const std::vector<Complex>& block(int weight) const { return blocks_.at(weight); }
    std::vector<Complex>& block(int weight) { return blocks_.at(weight); }

    TruncSeries& operator+=(const TruncSeries& o);
    TruncSeries& operator-=(const TruncSeries& o);
    TruncSeries& operator*=(Complex c);
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(Complex c, TruncSeries a) { return a *= c; }

    /// max over stored words of |a(w) - b(w)|.
    double distance(const TruncSeries& o) const;

    /// One "W: re+imi" line per coefficient with modulus above threshold, in
    /// graded lexicographic order; the empty word is written "1".
    std::string render(double threshold = 0.0) const;

private:
    void check_same_order(const TruncSeries& o) const;

    int order_;
    std::vector<std::vector<Complex>> blocks_;
};

/// Truncated product; throws std::invalid_argument on order mismatch.
TruncSeries mul(const TruncSeries& a, const TruncSeries& b);
inline TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) { return mul(a, b); }

/// Throws ZeroConstantTerm if the scalar part vanishes.
TruncSeries invert(const TruncSeries& a);

/// sum_n a^n L^n / n!.
TruncSeries exp_letter(Complex a, Letter l, int order);

/// Algebra homomorphism fixed by degree-one images of X and Y, each given as
/// the coefficient pair (of X, of Y).
struct LetterMap {
    std::array<Complex, 2> image_of_X{1.0, 0.0};
    std::array<Complex, 2> image_of_Y{0.0, 1.0};

    /// f_* from the table: (f_*(X), f_*(Y))^T = A(f) (X, Y)^T.
    static LetterMap pushforward(Mobius f);
};

TruncSeries subst(const TruncSeries& a, const LetterMap& m);

} // namespace mzv
