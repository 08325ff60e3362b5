#include "mzv/associator.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "mzv/errors.hpp"
#include "mzv/regularize.hpp"

namespace mzv {

namespace {

// (f(X, Y)) -> f(aX + bY, cX + dY)
LetterMap letters(Complex a, Complex b, Complex c, Complex d) { return LetterMap{{a, b}, {c, d}}; }

} // namespace

TruncSeries g0(Complex z, int order, const EvalConfig& cfg) {
    PolylogTable table(z, cfg);
    TruncSeries s(order);
    for (Word w : words_up_to(order)) s.set(w, table.word(w).value);
    return s;
}

TruncSeries g0_bar(Complex z, int order, const EvalConfig& cfg) {
    PolylogTable table(z, cfg);
    TruncSeries s(order);
    for (Word w : words_up_to(order)) s.set(w, table.poly(reg(w)).value);
    return s;
}

TruncSeries g1(Complex z, int order, const EvalConfig& cfg) {
    PolylogTable table(1.0 - z, cfg);
    const SubstRule rule = SubstRule::pullback(Mobius::one_minus_z);
    TruncSeries s(order);
    for (Word w : words_up_to(order)) s.set(w, table.poly(letter_subst(NCPoly(w), rule)).value);
    return s;
}

TruncSeries phi(int order, MzvEvaluator& mzv) {
    TruncSeries s(order);
    for (Word w : words_up_to(order)) s.set(w, mzv.word(w).value);
    return s;
}

TruncSeries phi(int order, const EvalConfig& cfg) {
    MzvEvaluator mzv(cfg);
    return phi(order, mzv);
}

CoefficientFn li_coefficients(const EvalConfig& cfg) {
    return [cfg](const NCPoly& p, Complex z) { return li_poly(p, z, cfg).value; };
}

CoefficientFn pi_action(Mobius f, CoefficientFn l) {
    const SubstRule rule = SubstRule::pullback(f);
    const Mobius finv = inverse(f);
    return [rule, finv, l = std::move(l)](const NCPoly& p, Complex z) {
        return l(letter_subst(p, rule), apply(finv, z));
    };
}

TruncSeries series_of(const CoefficientFn& l, Complex z, int order) {
    TruncSeries s(order);
    for (Word w : words_up_to(order)) s.set(w, l(NCPoly(w), z));
    return s;
}

double check_goreg(Complex z, int order, const EvalConfig& cfg) {
    const TruncSeries left = exp_letter(-std::log(1.0 - z), Letter::y, order);
    const TruncSeries right = exp_letter(std::log(z), Letter::x, order);
    return g0(z, order, cfg).distance(left * g0_bar(z, order, cfg) * right);
}

double check_c10(double z, int order, const EvalConfig& cfg) {
    if (!(z > 0.0 && z < 1.0)) throw DomainError(fmt::format("check_c10 needs 0 < z < 1, got {}", z));
    const TruncSeries c10 = invert(g1(z, order, cfg)) * g0(z, order, cfg);
    return c10.distance(phi(order, cfg));
}

DualityResidual check_duality(int order, const EvalConfig& cfg) {
    MzvEvaluator mzv(cfg);
    const TruncSeries p = phi(order, mzv);
    DualityResidual r;
    r.series = (p * subst(p, letters(0, -1, -1, 0))).distance(TruncSeries::one(order));
    for (Word w : words_up_to(order))
        r.words = std::max(r.words, std::abs(mzv.word(w).value - mzv.word(tau(w)).value));
    return r;
}

double check_landen_words(double z, int order, const EvalConfig& cfg) {
    if (!(z > 0.0 && z < 0.5)) throw DomainError(fmt::format("check_landen_words needs 0 < z < 1/2, got {}", z));
    const Mobius f = Mobius::z_over_z_minus_1;
    const SubstRule rule = SubstRule::pullback(f);
    PolylogTable at_z(z, cfg);
    PolylogTable at_fz(apply(f, z), cfg);
    double worst = 0.0;
    for (Word w : words_up_to(order)) {
        if (w.empty() || !w.in_h1()) continue;
        const Complex lhs = at_fz.poly(letter_subst(NCPoly(w), rule)).value;
        worst = std::max(worst, std::abs(lhs - at_z.word(w).value));
    }
    return worst;
}

double check_euler_words(double z, int order, const EvalConfig& cfg) {
    if (!(z > 0.0 && z < 1.0)) throw DomainError(fmt::format("check_euler_words needs 0 < z < 1, got {}", z));
    MzvEvaluator mzv(cfg);
    PolylogTable at_z(z, cfg);
    PolylogTable at_1mz(1.0 - z, cfg);
    double worst = 0.0;
    for (Word w : words_up_to(order)) {
        const int n = w.weight();
        Complex lhs = 0.0;
        for (int p = 0; p <= n; ++p) lhs += at_1mz.word(tau(w.prefix(p))).value * at_z.word(w.suffix(n - p)).value;
        worst = std::max(worst, std::abs(lhs - mzv.word(w).value));
    }
    return worst;
}

double check_hexagon(int order, BranchSign sign, const EvalConfig& cfg) {
    const double s = static_cast<int>(sign);
    const Complex ipi(0.0, std::numbers::pi);
    const TruncSeries p = phi(order, cfg);
    const LetterMap to_mxy_mx = letters(-1, 1, -1, 0); // X -> -X+Y, Y -> -X
    const LetterMap to_mxy_y = letters(-1, 1, 0, 1);   // X -> -X+Y, Y -> Y

    const TruncSeries lhs = exp_letter(s * ipi, Letter::x, order);
    const TruncSeries rhs = subst(p, to_mxy_mx) * subst(exp_letter(-s * ipi, Letter::x, order), to_mxy_y) *
                            invert(subst(p, to_mxy_y)) * exp_letter(s * ipi, Letter::y, order) * p;
    return lhs.distance(rhs);
}

} // namespace mzv
