#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "mzv/associator.hpp"
#include "mzv/errors.hpp"
#include "mzv/regularize.hpp"

using namespace mzv;

namespace {

Word W(const char* s) { return Word::parse(s); }

TruncSeries random_series(std::mt19937& rng, int order, bool unit) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    TruncSeries s(order);
    for (Word w : words_up_to(order)) s.set(w, Complex(u(rng), u(rng)));
    if (unit) s.set(Word{}, 1.0);
    return s;
}

// Evaluates sum_w c(w) W with complex coefficients computed from exact ones.
TruncSeries from_poly_coefficients(int order, const std::function<NCPoly(Word)>& coeff,
                                   const std::function<Complex(const NCPoly&)>& eval) {
    TruncSeries s(order);
    for (Word w : words_up_to(order)) s.set(w, eval(coeff(w)));
    return s;
}

} // namespace

TEST(NcSeries, UnitAndProducts) {
    std::mt19937 rng(3);
    const TruncSeries a = random_series(rng, 5, false);
    EXPECT_EQ(TruncSeries::one(5).distance(TruncSeries::one(5)), 0.0);
    EXPECT_EQ((TruncSeries::one(5) * a).distance(a), 0.0);
    EXPECT_EQ((a * TruncSeries::one(5)).distance(a), 0.0);

    const TruncSeries x = TruncSeries::one(3) + TruncSeries::letter(Letter::x, 3);
    const TruncSeries y = TruncSeries::one(3) + TruncSeries::letter(Letter::y, 3);
    const TruncSeries p = x * y;
    for (const char* w : {"", "x", "y", "xy"}) EXPECT_EQ(p.coeff(W(w)), Complex(1.0));
    EXPECT_EQ(p.coeff(W("yx")), Complex(0.0));
}

TEST(NcSeries, Associativity) {
    std::mt19937 rng(5);
    const TruncSeries a = random_series(rng, 5, false), b = random_series(rng, 5, false), c = random_series(rng, 5, false);
    EXPECT_LT(((a * b) * c).distance(a * (b * c)), 1e-12);
}

TEST(NcSeries, Inverse) {
    std::mt19937 rng(9);
    const TruncSeries a = random_series(rng, 6, true);
    EXPECT_LT((a * invert(a)).distance(TruncSeries::one(6)), 1e-12);
    EXPECT_LT((invert(a) * a).distance(TruncSeries::one(6)), 1e-12);

    const TruncSeries geom = invert(TruncSeries::one(6) + TruncSeries::letter(Letter::x, 6));
    for (int n = 0; n <= 6; ++n) EXPECT_EQ(geom.coeff(Word::power(Letter::x, n)), Complex(n % 2 ? -1.0 : 1.0));
    EXPECT_EQ(geom.coeff(W("xy")), Complex(0.0));

    EXPECT_LT(invert(exp_letter(0.7, Letter::x, 6)).distance(exp_letter(-0.7, Letter::x, 6)), 1e-15);
    EXPECT_THROW(invert(TruncSeries::letter(Letter::x, 3)), ZeroConstantTerm);
}

TEST(NcSeries, ExpLetter) {
    EXPECT_EQ(exp_letter(0.0, Letter::x, 4).distance(TruncSeries::one(4)), 0.0);
    const Complex ipi(0.0, std::numbers::pi);
    const TruncSeries e = exp_letter(ipi, Letter::x, 2);
    EXPECT_EQ(e.coeff(W("x")), ipi);
    EXPECT_NEAR(e.coeff(W("xx")).real(), -std::numbers::pi * std::numbers::pi / 2, 1e-15);
    const Complex a(0.3, -1.1);
    EXPECT_LT(std::abs(exp_letter(a, Letter::y, 3).coeff(W("yy")) - a * a / 2.0), 1e-16);
    EXPECT_LT((exp_letter(a, Letter::y, 6) * exp_letter(-a, Letter::y, 6)).distance(TruncSeries::one(6)), 1e-15);
}

TEST(NcSeries, CoefficientAccess) {
    EXPECT_EQ(TruncSeries::one(2).coeff(Word{}), Complex(1.0));
    EXPECT_EQ(TruncSeries::letter(Letter::x, 2).coeff(W("y")), Complex(0.0));
    EXPECT_THROW(TruncSeries::one(2).coeff(W("xyx")), std::out_of_range);
    EXPECT_THROW(TruncSeries(2) * TruncSeries(3), std::invalid_argument);
}

TEST(NcSeries, SubstExamples) {
    const LetterMap swap_neg{{0.0, -1.0}, {-1.0, 0.0}};
    EXPECT_EQ(subst(TruncSeries::letter(Letter::x, 2), swap_neg).coeff(W("y")), Complex(-1.0));
    EXPECT_EQ(subst(TruncSeries::one(4), swap_neg).distance(TruncSeries::one(4)), 0.0);
    TruncSeries bracket(2);
    bracket.set(W("xy"), 1.0);
    bracket.set(W("yx"), -1.0);
    EXPECT_EQ(subst(bracket, swap_neg).distance(-1.0 * bracket), 0.0);
}

TEST(NcSeries, SubstIsHomomorphism) {
    std::mt19937 rng(13);
    const TruncSeries a = random_series(rng, 5, false), b = random_series(rng, 5, false);
    const LetterMap m{{Complex(0.5, 1.0), -2.0}, {1.5, Complex(0.0, -0.25)}};
    EXPECT_LT(subst(a * b, m).distance(subst(a, m) * subst(b, m)), 1e-12);
}

TEST(NcSeries, PushforwardComposes) {
    std::mt19937 rng(17);
    const TruncSeries a = random_series(rng, 5, false);
    for (Mobius f : all_mobius)
        for (Mobius g : all_mobius) {
            const TruncSeries lhs = subst(a, LetterMap::pushforward(compose(f, g)));
            const TruncSeries rhs = subst(subst(a, LetterMap::pushforward(g)), LetterMap::pushforward(f));
            EXPECT_LT(lhs.distance(rhs), 1e-12) << mobius_label(f) << " " << mobius_label(g);
        }
}

TEST(NcSeries, AntipodeSeriesInvertsChenSeries) {
    // sum_w S(w) W is the inverse of sum_w w W; tested under two characters
    const int order = 6;
    const auto word = [](Word w) { return NCPoly(w); };
    const auto anti = [](Word w) { return antipode(NCPoly(w)); };
    MzvEvaluator mzv;
    const std::function<Complex(const NCPoly&)> zeta_char = [&](const NCPoly& p) { return mzv.poly(reg(p)).value; };
    PolylogTable table(0.35);
    const std::function<Complex(const NCPoly&)> li_char = [&](const NCPoly& p) { return table.poly(p).value; };
    for (const auto& ch : {zeta_char, li_char}) {
        const TruncSeries chen = from_poly_coefficients(order, word, ch);
        const TruncSeries inv = from_poly_coefficients(order, anti, ch);
        EXPECT_LT((chen * inv).distance(TruncSeries::one(order)), 1e-10);
    }
}

TEST(NcSeries, Render) {
    TruncSeries s = TruncSeries::one(2);
    s.set(W("xy"), Complex(1.5, -2.0));
    EXPECT_EQ(s.render(), "1: 1+0i\nXY: 1.5-2i\n");
}
