#include "mzv/cli.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "mzv/associator.hpp"
#include "mzv/errors.hpp"
#include "mzv/hurwitz.hpp"
#include "mzv/mellin_sum.hpp"
#include "mzv/regularize.hpp"

namespace mzv::cli {

namespace {

struct Settings {
    int weight = 6;
    double tol = 1e-8;
    bool tol_given = false;
    double z = 0.3;
    std::optional<int> terms;
    std::string format = "text";
    std::string branch;
};

using Record = std::vector<std::pair<std::string, std::string>>;

std::string num(double v) { return fmt::format("{:.16g}", v); }
std::string sci(double v) { return fmt::format("{:.3e}", v); }

void print(const std::vector<Record>& records, const std::string& format, std::ostream& out) {
    if (format == "csv") {
        if (records.empty()) return;
        std::string header;
        for (const auto& [k, v] : records.front()) header += (header.empty() ? "" : ",") + k;
        out << header << '\n';
        for (const Record& r : records) {
            std::string row;
            for (std::size_t i = 0; i < r.size(); ++i) row += (i ? "," : "") + r[i].second;
            out << row << '\n';
        }
        return;
    }
    for (const Record& r : records) {
        std::string line;
        for (const auto& [k, v] : r) line += (line.empty() ? "" : " ") + k + "=" + v;
        out << line << '\n';
    }
}

struct CheckOutcome {
    double residual = 0.0;
    std::string note;
    bool extra_ok = true; // conditions besides the residual threshold
};

CheckOutcome residual_only(double r) {
    CheckOutcome o;
    o.residual = r;
    return o;
}

struct Check {
    double default_threshold;
    std::function<CheckOutcome(const Settings&)> run;
};

std::vector<BranchSign> branches(const Settings& s) {
    if (s.branch == "+") return {BranchSign::plus};
    if (s.branch == "-") return {BranchSign::minus};
    return {BranchSign::plus, BranchSign::minus};
}

const std::map<std::string, Check>& checks() {
    static const std::map<std::string, Check> table = {
        {"c10", {1e-8, [](const Settings& s) { return residual_only(check_c10(s.z, s.weight)); }}},
        {"duality",
         {1e-8,
          [](const Settings& s) {
              const DualityResidual d = check_duality(s.weight);
              return CheckOutcome{std::max(d.series, d.words), fmt::format("series={};words={}", sci(d.series), sci(d.words))};
          }}},
        {"em2",
         {1e-3,
          [](const Settings& s) {
              const int l = s.terms.value_or(200);
              const double zz = s.z;
              const Em2Result a = check_em2(-0.5, zz, l);
              const Em2Result b = check_em2(-0.5, zz, 2 * l);
              const double ratio = a.residual / b.residual;
              return CheckOutcome{a.residual, fmt::format("l_max={};doubled={};ratio={:.4f}", l, sci(b.residual), ratio),
                                  ratio >= 1.5};
          }}},
        {"euler", {1e-8, [](const Settings& s) { return residual_only(check_euler_words(s.z, s.weight)); }}},
        {"goreg", {1e-8, [](const Settings& s) { return residual_only(check_goreg(s.z, s.weight)); }}},
        {"heart",
         {1e-8,
          [](const Settings& s) {
              MzvEvaluator mzv;
              double worst = 0.0;
              bool exact = true;
              for (int n = 2; n <= s.weight; ++n) {
                  exact = exact && heart_binomial_identity(n);
                  for (int k = 2; k <= n; ++k) worst = std::max(worst, check_heart(n, k, mzv));
              }
              return CheckOutcome{worst, fmt::format("binomial={}", exact), exact};
          }}},
        {"hexagon",
         {1e-8,
          [](const Settings& s) {
              double worst = 0.0;
              std::string note;
              for (BranchSign b : branches(s)) {
                  const double r = check_hexagon(s.weight, b);
                  worst = std::max(worst, r);
                  note += fmt::format("{}{}={}", note.empty() ? "" : ";", b == BranchSign::plus ? "plus" : "minus", sci(r));
              }
              return CheckOutcome{worst, note};
          }}},
        {"hurwitz",
         {1e-8,
          [](const Settings&) {
              double worst = 0.0;
              for (double sv : {-0.5, -1.5})
                  for (double zz : {0.25, 1.0 / 3.0, 0.5, 0.75}) worst = std::max(worst, check_hurwitz_relation(sv, zz));
              return residual_only(worst);
          }}},
        {"kummer",
         {1e-8,
          [](const Settings&) {
              const Complex samples[3][3] = {{1.0, 0.5, 2.0}, {1.0, -0.5, 5.0}, {1.0, 0.5, 3.0}};
              double classical = 0.0, printed = 0.0;
              for (const auto& p : samples) {
                  const KummerConnectionResult r = check_kummer_connection(p[0], p[1], p[2]);
                  classical = std::max(classical, r.classical);
                  printed = std::max(printed, r.printed);
              }
              return CheckOutcome{classical, fmt::format("variant=classical;printed={}", sci(printed))};
          }}},
        {"landen", {1e-8, [](const Settings& s) { return residual_only(check_landen_words(s.z, s.weight)); }}},
        {"landen-lemma",
         {1e-8,
          [](const Settings& s) {
              double worst = 0.0;
              for (int m = 1; m <= std::min(s.weight, 6); ++m)
                  for (int j = 1; j <= m; ++j) worst = std::max(worst, check_landen_lemma(m, j, s.z));
              return residual_only(worst);
          }}},
        {"mellin",
         {1e-8,
          [](const Settings&) {
              MzvEvaluator mzv;
              double euler = 0.0, beta = 0.0, landen = 0.0;
              for (auto [k, l] : {std::pair{2, -0.5}, {4, 0.3}, {3, 0.5}}) euler = std::max(euler, check_euler_mellin(k, l));
              for (auto [k, l] : {std::pair{2, -0.5}, {3, -1.0}, {2, -1.0}})
                  beta = std::max(beta, std::abs(beta_term_sides(k, l, mzv).residual()));
              for (auto [m, l] : {std::pair{2, -0.4}, {3, 0.25}}) {
                  const MellinLandenResult r = check_mellin_landen(m, l, mzv);
                  landen = std::max(landen, r.residual);
                  for (double t : r.taylor) landen = std::max(landen, t);
              }
              const Word li2 = Word::parse("xy");
              const ApproxValue q =
                  mellin_quadrature([&](double z, double omz) { return li_unit_interval(li2, z, omz, mzv); }, 1.0);
              const double li2_at_one = std::abs(q.value - (std::numbers::pi * std::numbers::pi / 6.0 - 1.0));
              const double worst = std::max({euler, beta, landen, li2_at_one});
              return CheckOutcome{worst, fmt::format("euler={};beta={};landen={};li2={}", sci(euler), sci(beta), sci(landen),
                                                     sci(li2_at_one))};
          }}},
        {"sumformula",
         {1e-8,
          [](const Settings& s) {
              MzvEvaluator mzv;
              double worst = 0.0;
              for (int n = 2; n <= s.weight; ++n)
                  for (double r : check_sum_formula(n, mzv)) worst = std::max(worst, r);
              return residual_only(worst);
          }}},
    };
    return table;
}

Record run_check(const std::string& name, const Settings& s) {
    const Check& c = checks().at(name);
    const double threshold = s.tol_given ? s.tol : c.default_threshold;
    CheckOutcome o;
    try {
        o = c.run(s);
    } catch (const std::exception& e) {
        o.residual = std::numeric_limits<double>::infinity();
        o.note = fmt::format("error: {}", e.what());
    }
    const bool pass = o.extra_ok && std::isfinite(o.residual) && o.residual <= threshold;
    return {{"check", name}, {"weight", std::to_string(s.weight)}, {"residual", sci(o.residual)},
            {"tol", sci(threshold)}, {"pass", pass ? "true" : "false"}, {"note", o.note}};
}

Record value_record(const ApproxValue& v, bool complex_valued) {
    Record r{{"value", num(v.value.real())}};
    if (complex_valued) r.emplace_back("imag", num(v.value.imag()));
    r.emplace_back("err", sci(v.err));
    return r;
}

} // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    Settings s;
    CLI::App app{"Multiple zeta values, polylogarithms and the identities between them"};
    app.require_subcommand(1);
    app.add_option("--weight", s.weight, "weight or truncation order")->envname("MZV_WEIGHT")->check(CLI::Range(1, 12));
    CLI::Option* tol_opt =
        app.add_option("--tol", s.tol, "pass threshold for verify, replacing per-check defaults")->envname("MZV_TOL");
    app.add_option("--z", s.z, "evaluation point")->envname("MZV_Z");
    app.add_option("--terms", s.terms, "truncation length for em2")->envname("MZV_TERMS")->check(CLI::PositiveNumber);
    app.add_option("--format", s.format, "text or csv")->envname("MZV_FORMAT")->check(CLI::IsMember({"text", "csv"}));
    app.add_option("--branch", s.branch, "hexagon branch sign, + or -")->envname("MZV_BRANCH")->check(CLI::IsMember({"+", "-"}));

    std::vector<Record> records;
    int status = 0;

    std::string a, b;
    auto* shuffle_cmd = app.add_subcommand("shuffle", "shuffle product of two polynomials")->fallthrough();
    shuffle_cmd->add_option("u", a)->required();
    shuffle_cmd->add_option("v", b)->required();
    shuffle_cmd->callback([&] { records.push_back({{"result", shuffle(NCPoly::parse(a), NCPoly::parse(b)).str()}}); });

    auto* reg_cmd = app.add_subcommand("reg", "regularization of a word")->fallthrough();
    reg_cmd->add_option("word", a)->required();
    reg_cmd->callback([&] { records.push_back({{"result", reg(Word::parse(a)).str()}}); });

    auto* tau_cmd = app.add_subcommand("tau", "duality involution of a polynomial")->fallthrough();
    tau_cmd->add_option("poly", a)->required();
    tau_cmd->callback([&] { records.push_back({{"result", tau(NCPoly::parse(a)).str()}}); });

    auto* zeta_cmd = app.add_subcommand("zeta", "regularized MZV of an index such as 2,1")->fallthrough();
    zeta_cmd->add_option("index", a)->required();
    zeta_cmd->callback([&] { records.push_back(value_record(zeta(MultiIndex::parse(a)), false)); });

    int n = 0, r = 0;
    auto* sum_cmd = app.add_subcommand("sum", "sum of all MZVs of weight n and depth r")->fallthrough();
    sum_cmd->add_option("n", n)->required()->check(CLI::Range(2, 12));
    sum_cmd->add_option("r", r)->required()->check(CLI::Range(1, 11));
    sum_cmd->callback([&] {
        if (r >= n) throw CLI::ValidationError("r", "depth must be below the weight");
        records.push_back(value_record(sum_weight_depth(n, r), false));
    });

    auto* li_cmd = app.add_subcommand("li", "multiple polylogarithm of an index at --z")->fallthrough();
    li_cmd->add_option("index", a)->required();
    li_cmd->callback([&] { records.push_back(value_record(li_admissible(MultiIndex::parse(a), s.z), true)); });

    auto* phi_cmd = app.add_subcommand("phi", "Drinfeld associator through order --weight")->fallthrough();
    phi_cmd->callback([&] {
        const TruncSeries p = phi(s.weight);
        if (s.format == "text") {
            out << p.render(1e-15);
            return;
        }
        for (Word w : words_up_to(s.weight)) {
            const Complex c = p.coeff(w);
            if (std::abs(c) > 1e-15) records.push_back({{"word", w.empty() ? "1" : w.str()}, {"re", num(c.real())}, {"im", num(c.imag())}});
        }
    });

    int k = 2;
    double lambda = 0.0;
    auto* mellin_cmd = app.add_subcommand("mellin", "sum_n 1/(n^k (n - lambda))")->fallthrough();
    mellin_cmd->add_option("k", k)->required()->check(CLI::Range(2, 12));
    mellin_cmd->add_option("lambda", lambda)->required();
    mellin_cmd->callback([&] { records.push_back(value_record(mellin_li_series(k, lambda), false)); });

    double sval = 0.0;
    auto* hz_cmd = app.add_subcommand("hurwitz", "Hurwitz zeta at real s and --z")->fallthrough();
    hz_cmd->add_option("s", sval)->required();
    hz_cmd->callback([&] { records.push_back(value_record(hurwitz_zeta(sval, s.z), false)); });

    auto* verify = app.add_subcommand("verify", "run identity checks")->fallthrough()->require_subcommand(1);
    auto add_verify = [&](const std::string& name, std::vector<std::string> which) {
        verify->add_subcommand(name)->fallthrough()->callback([&, which] {
            s.tol_given = tol_opt->count() > 0;
            for (const std::string& c : which) {
                records.push_back(run_check(c, s));
                if (records.back()[4].second != "true") status = 1;
            }
        });
    };
    std::vector<std::string> all;
    for (const auto& [name, c] : checks()) {
        add_verify(name, {name});
        all.push_back(name);
    }
    add_verify("all", all);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    print(records, s.format, out);
    return status;
}

} // namespace mzv::cli
