#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "mzv/errors.hpp"
#include "mzv/mzv.hpp"
#include "mzv/regularize.hpp"

using namespace mzv;

namespace {

const double pi = std::numbers::pi;
const double zeta2 = pi * pi / 6;
const double zeta3 = 1.2020569031595942854;
const double zeta4 = pi * pi * pi * pi / 90;

Word W(const char* s) { return Word::parse(s); }

class Mzv : public ::testing::Test {
protected:
    MzvEvaluator mzv;
};

} // namespace

TEST(ZetaDirect, Values) {
    const ApproxValue z2 = zeta_direct(MultiIndex::parse("2"));
    EXPECT_NEAR(z2.value.real(), zeta2, z2.err);
    EXPECT_LT(z2.err, 1e-10);
    const ApproxValue z3 = zeta_direct(MultiIndex::parse("3"));
    EXPECT_NEAR(z3.value.real(), zeta3, z3.err);
    const ApproxValue z21 = zeta_direct(MultiIndex::parse("2,1"));
    EXPECT_NEAR(z21.value.real(), zeta3, z21.err);
    EXPECT_THROW(zeta_direct(MultiIndex::parse("1,1")), NonAdmissible);
}

TEST_F(Mzv, WordValues) {
    EXPECT_NEAR(mzv.word(W("xy")).value.real(), zeta2, 1e-14);
    EXPECT_NEAR(mzv.word(W("yx")).value.real(), -zeta2, 1e-14);
    EXPECT_EQ(mzv.word(Word{}).value, Complex(1.0));
    EXPECT_NEAR(mzv.word(W("xxy")).value.real(), zeta3, 1e-14);
    EXPECT_NEAR(mzv.word(W("xyy")).value.real(), zeta3, 1e-14);
    EXPECT_NEAR(mzv.word(W("xxxy")).value.real(), zeta4, 1e-14);
    // Euler: zeta(3,1) = pi^4/360, zeta(2,2) = pi^4/120
    EXPECT_NEAR(mzv.index(MultiIndex::parse("3,1")).value.real(), zeta4 / 4, 1e-14);
    EXPECT_NEAR(mzv.index(MultiIndex::parse("2,2")).value.real(), zeta4 * 3 / 4, 1e-14);
    EXPECT_NEAR(mzv.index(MultiIndex::parse("5")).value.real(), 1.0369277551433699263, 1e-14);
    EXPECT_EQ(mzv.word(W("x")).value, Complex(0.0));
    EXPECT_EQ(mzv.word(W("y")).value, Complex(0.0));
}

TEST_F(Mzv, PolyRelations) {
    const NCPoly sh = shuffle(W("xy"), W("xy"));
    EXPECT_LT(std::abs(mzv.poly(sh - NCPoly::parse("2*xyxy + 4*xxyy")).value), 1e-9);
    EXPECT_NEAR(mzv.poly(sh).value.real(), zeta2 * zeta2, 1e-13);
    EXPECT_LT(std::abs(mzv.poly(NCPoly::parse("xxy - xyy")).value), 1e-14);
    EXPECT_EQ(mzv.poly(NCPoly{}).value, Complex(0.0));
}

TEST_F(Mzv, RegularizedValuesAreShuffleCharacter) {
    for (Word u : words_up_to(3))
        for (Word v : words_up_to(3)) {
            const double lhs = mzv.poly(reg(shuffle(u, v))).value.real();
            const double rhs = mzv.poly(reg(u)).value.real() * mzv.poly(reg(v)).value.real();
            EXPECT_NEAR(lhs, rhs, 1e-13) << u.str() << " " << v.str();
        }
}

TEST_F(Mzv, SumOverWeightAndDepth) {
    EXPECT_NEAR(sum_weight_depth(3, 2, mzv).value.real(), zeta3, 1e-13);
    EXPECT_NEAR(sum_weight_depth(4, 2, mzv).value.real(), zeta4, 1e-13);
    for (int n = 2; n <= 7; ++n) {
        const double zn = mzv.index(MultiIndex{{n}}).value.real();
        EXPECT_NEAR(sum_weight_depth(n, n - 1, mzv).value.real(), zn, 1e-13) << n;
    }
}

TEST_F(Mzv, DirectSummationAgreesWithinItsError) {
    for (Word w : words_up_to(5)) {
        if (w.empty() || !w.admissible()) continue;
        const ApproxValue d = zeta_direct(MultiIndex::from_word(w), 200000);
        EXPECT_LE(std::abs(mzv.word(w).value - d.value), d.err) << w.str();
    }
}

TEST_F(Mzv, NearOneMatchesDirectSeries) {
    for (const char* s : {"xy", "xyy", "yx", "xxy", "yxy"})
        for (double t : {0.5, 0.1, 0.01}) {
            const Word w = W(s);
            const Complex near = li_near_one(w, t, mzv).value;
            const Complex direct = li_word(w, 1.0 - t).value;
            EXPECT_LT(std::abs(near - direct), 1e-12) << s << " t=" << t;
        }
    EXPECT_THROW(li_near_one(W("xy"), 0.6, mzv), DomainError);
}
