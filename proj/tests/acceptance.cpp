// Runs the twelve acceptance criteria and prints one PASS/FAIL line each.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>

#include "mzv/associator.hpp"
#include "mzv/hurwitz.hpp"
#include "mzv/mellin_sum.hpp"
#include "mzv/regularize.hpp"

using namespace mzv;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt_e(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

Word random_word(std::mt19937& rng, int max_len) {
    const int n = std::uniform_int_distribution<int>(0, max_len)(rng);
    return Word::from_bits(rng() & ((1u << n) - 1), n);
}

Outcome exact_algebra() {
    std::mt19937 rng(20240601);
    int failures = 0;
    for (int t = 0; t < 200; ++t) {
        const Word a = random_word(rng, 4), b = random_word(rng, 4), c = random_word(rng, 3);
        if (shuffle(a, b) != shuffle(b, a)) ++failures;
        if (shuffle(shuffle(NCPoly(a), NCPoly(b)), NCPoly(c)) != shuffle(NCPoly(a), shuffle(NCPoly(b), NCPoly(c)))) ++failures;
    }
    const std::vector<Word> words = words_up_to(8);
    for (Word w : words) {
        const NCPoly p(w);
        if (antipode(antipode(p)) != p || tau(tau(w)) != w) ++failures;
        if (decompose(w).reconstruct() != p) ++failures;
        if (reg(reg(w)) != reg(w)) ++failures;
    }
    int pairs = 0;
    for (; pairs < 200; ++pairs) {
        const Word u = random_word(rng, 4), v = random_word(rng, 4);
        if (reg(shuffle(u, v)) != shuffle(reg(u), reg(v))) ++failures;
    }
    return {failures == 0, "words=" + std::to_string(words.size()) + " reg_pairs=" + std::to_string(pairs) +
                               " failures=" + std::to_string(failures)};
}

Outcome sum_formula(MzvEvaluator& mzv) {
    double worst = 0.0;
    for (int n = 2; n <= 7; ++n)
        for (double r : check_sum_formula(n, mzv)) worst = std::max(worst, r);
    return {worst <= 1e-7, "max=" + fmt_e(worst)};
}

Outcome heart(MzvEvaluator& mzv) {
    double worst = 0.0;
    bool binomial = true;
    for (int n = 2; n <= 7; ++n) {
        binomial = binomial && heart_binomial_identity(n);
        for (int k = 2; k <= n; ++k) worst = std::max(worst, check_heart(n, k, mzv));
    }
    return {worst <= 1e-7 && binomial, "max=" + fmt_e(worst) + (binomial ? " binomial=exact" : " binomial=FAILED")};
}

Outcome duality() {
    const DualityResidual d = check_duality(7);
    return {d.words <= 1e-8 && d.series <= 1e-8, "words=" + fmt_e(d.words) + " series=" + fmt_e(d.series)};
}

Outcome euler() {
    const double a = check_euler_words(0.3, 5), b = check_euler_words(0.7, 5);
    return {std::max(a, b) <= 1e-8, "z=0.3:" + fmt_e(a) + " z=0.7:" + fmt_e(b)};
}

Outcome landen() {
    double words = 0.0, lemma = 0.0;
    for (double z : {0.25, 0.4}) {
        words = std::max(words, check_landen_words(z, 5));
        for (int m = 1; m <= 5; ++m)
            for (int j = 1; j <= m; ++j) lemma = std::max(lemma, check_landen_lemma(m, j, z));
    }
    return {std::max(words, lemma) <= 1e-6, "words=" + fmt_e(words) + " lemma=" + fmt_e(lemma)};
}

Outcome connection_constant() {
    double r[3], i = 0;
    for (double z : {0.2, 0.5, 0.8}) r[static_cast<int>(i++)] = check_c10(z, 5);
    const double hi = std::max({r[0], r[1], r[2]}), lo = std::min({r[0], r[1], r[2]});
    return {hi <= 1e-7 && hi - lo <= 1e-8,
            "z=0.2:" + fmt_e(r[0]) + " z=0.5:" + fmt_e(r[1]) + " z=0.8:" + fmt_e(r[2]) + " spread=" + fmt_e(hi - lo)};
}

Outcome hexagon() {
    const double p = check_hexagon(6, BranchSign::plus), m = check_hexagon(6, BranchSign::minus);
    return {std::max(p, m) <= 1e-7, "plus=" + fmt_e(p) + " minus=" + fmt_e(m)};
}

Outcome mellin(MzvEvaluator& mzv) {
    double euler = 0.0, beta = 0.0, landen = 0.0;
    for (auto [k, l] : {std::pair{2, -0.5}, {4, 0.3}, {3, -0.7}, {3, 0.5}}) euler = std::max(euler, check_euler_mellin(k, l));
    for (auto [k, l] : {std::pair{2, -0.5}, {3, -1.0}, {2, -1.0}, {4, -0.5}})
        beta = std::max(beta, beta_term_sides(k, l, mzv).residual());
    for (auto [m, l] : {std::pair{2, -0.4}, {3, 0.25}, {4, -0.6}}) {
        const MellinLandenResult r = check_mellin_landen(m, l, mzv);
        landen = std::max(landen, r.residual);
        for (double t : r.taylor) landen = std::max(landen, t);
    }
    const Word li2 = Word::parse("xy");
    const ApproxValue q = mellin_quadrature([&](double z, double omz) { return li_unit_interval(li2, z, omz, mzv); }, 1.0);
    const double cross = std::abs(q.value.real() - (std::numbers::pi * std::numbers::pi / 6 - 1.0));
    const bool ok = std::max({euler, beta, landen}) <= 1e-7 && cross <= 1e-8;
    return {ok, "euler=" + fmt_e(euler) + " beta=" + fmt_e(beta) + " landen=" + fmt_e(landen) + " M[Li2](1)=" + fmt_e(cross)};
}

Outcome cross_evaluator(MzvEvaluator& mzv) {
    double worst_ratio = 0.0, worst_err = 0.0;
    int words = 0;
    bool ok = true;
    for (Word w : words_up_to(6)) {
        if (w.empty() || !w.admissible()) continue;
        ++words;
        const ApproxValue d = zeta_direct(MultiIndex::from_word(w), 1000000);
        const double diff = std::abs(mzv.word(w).value - d.value);
        ok = ok && diff <= d.err && d.err <= 1e-4;
        worst_ratio = std::max(worst_ratio, diff / d.err);
        worst_err = std::max(worst_err, d.err);
    }
    return {ok, "words=" + std::to_string(words) + " max|diff|/err=" + fmt_e(worst_ratio) + " max_err=" + fmt_e(worst_err)};
}

double direct_hurwitz(double s, double z, long n) {
    long double acc = 0;
    for (long k = n - 1; k >= 0; --k) acc += std::pow(static_cast<long double>(k) + z, -static_cast<long double>(s));
    const double a = n + z;
    return static_cast<double>(acc) + std::pow(a, 1 - s) / (s - 1) + 0.5 * std::pow(a, -s) + s / 12 * std::pow(a, -s - 1);
}

Outcome hurwitz() {
    double relation = 0.0;
    for (double s : {-0.5, -1.5})
        for (double z : {0.25, 1.0 / 3, 0.5, 0.75}) relation = std::max(relation, check_hurwitz_relation(s, z));
    double em1 = 0.0;
    for (double s : {1.5, 2.5, 3.0})
        for (double z : {0.2, 0.5, 0.9}) em1 = std::max(em1, std::abs(hurwitz_zeta(s, z).value.real() - direct_hurwitz(s, z, 100000)));
    const double asym = std::abs(50.0 * kummer_U(1.0, 0.0, 50.0).value.real() - 1.0);
    double em2 = 0.0, ratio = INFINITY;
    for (double z : {1.0 / 3, 0.5}) {
        const Em2Result a = check_em2(-0.5, z, 200), b = check_em2(-0.5, z, 400);
        em2 = std::max(em2, a.residual);
        ratio = std::min(ratio, a.residual / b.residual);
    }
    const bool ok = relation <= 1e-6 && em1 <= 1e-9 && asym <= 0.05 && em2 <= 1e-3 && ratio >= 1.5;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", ratio);
    return {ok, "relation=" + fmt_e(relation) + " em1=" + fmt_e(em1) + " asym=" + fmt_e(asym) + " em2(200)=" + fmt_e(em2) +
                    " doubling_ratio=" + buf};
}

Outcome kummer() {
    double printed = 0.0, classical = 0.0;
    for (const auto& [a, g, x] : {std::tuple{1.0, 0.5, 2.0}, {1.0, -0.5, 5.0}, {0.5, 0.3, 1.5}}) {
        const KummerConnectionResult r = check_kummer_connection(a, g, x);
        printed = std::max(printed, r.printed);
        classical = std::max(classical, r.classical);
    }
    const bool printed_ok = printed <= 1e-8, classical_ok = classical <= 1e-8;
    const std::string certified = printed_ok ? "printed" : classical_ok ? "classical" : "none";
    return {printed_ok || classical_ok, "certified=" + certified + " printed=" + fmt_e(printed) + (printed_ok ? "(pass)" : "(fail)") +
                                            " classical=" + fmt_e(classical) + (classical_ok ? "(pass)" : "(fail)")};
}

} // namespace

int main() {
    MzvEvaluator mzv;
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"exact-algebra", exact_algebra},
        {"sum-formula", [&] { return sum_formula(mzv); }},
        {"heart-identity", [&] { return heart(mzv); }},
        {"duality", duality},
        {"euler-connection", euler},
        {"landen-and-lemma", landen},
        {"connection-constant", connection_constant},
        {"hexagon", hexagon},
        {"mellin-suite", [&] { return mellin(mzv); }},
        {"cross-evaluator-mzv", [&] { return cross_evaluator(mzv); }},
        {"hurwitz-relation", hurwitz},
        {"kummer-connection", kummer},
    };
    int failed = 0, index = 0;
    for (const auto& [name, run] : criteria) {
        ++index;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s %2d %-20s %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str(), secs);
        std::fflush(stdout);
        if (!o.pass) ++failed;
    }
    std::printf("%d/%d criteria passed\n", index - failed, index);
    return failed == 0 ? 0 : 1;
}
