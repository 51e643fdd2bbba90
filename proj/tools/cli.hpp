#pragma once

// Command-line front end: argument grammar, dispatch and output formatting.
//
//   eulinv poly --kind invB --n 4 [--stat desB|desCoxeter]
//   eulinv gamma --kind invB --n 6        | eulinv gamma --n-max 30
//   eulinv verify <check> [--n-max N] [--m-max M] [--k-max K] [--trials T] [--seed S]
//   eulinv counterexample r89
//   eulinv table
//
// Global: --format plain|structured, --budget N (or EULINV_BUDGET).
// Exit status: 0 all hard checks pass, 1 a hard check failed, 2 usage error
// or exhausted enumeration budget.

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eulinv/eulinv.hpp"

namespace eulinv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct CommandConfig {
    std::string format = "plain";
    std::optional<std::uint64_t> budget;
    std::string kind = "invB";
    std::string stat = "desB";
    int n = -1;
    int n_max = -1;
    int m_max = -1;
    int k_max = -1;
    int trials = 10000;
    std::uint64_t seed = 20180122;
};

namespace detail {

inline std::uint64_t resolve_budget(const CommandConfig& cfg) {
    if (cfg.budget) return *cfg.budget;
    if (const char* env = std::getenv("EULINV_BUDGET")) {
        try {
            const auto v = std::stoull(env);
            if (v >= 1) return v;
        } catch (const std::exception&) {
        }
        throw CLI::ValidationError("EULINV_BUDGET", "must be a positive integer");
    }
    return kDefaultBudget;
}

inline int emit(const Report& report, const CommandConfig& cfg, std::ostream& out) {
    if (cfg.format == "structured") report.write_structured(out);
    else report.write_plain(out);
    return report.ok() ? kExitOk : kExitFailure;
}

inline int with_default(int value, int fallback) { return value < 0 ? fallback : value; }

inline BStatistic parse_stat(const std::string& s) { return s == "desCoxeter" ? BStatistic::desCoxeter : BStatistic::desB; }

inline IntPolynomial named_polynomial(const CommandConfig& cfg, std::uint64_t budget) {
    const auto stat = parse_stat(cfg.stat);
    if (cfg.kind == "invA") return involution_eulerian(cfg.n, budget).poly;
    if (cfg.kind == "invB") return signed_involution_eulerian(cfg.n, stat, budget).poly;
    if (cfg.kind == "fullA") return full_eulerian(cfg.n, false, stat, budget).poly;
    if (cfg.kind == "fullB") return full_eulerian(cfg.n, true, stat, budget).poly;
    if (cfg.kind == "recB") return recurrence_IB(cfg.n).poly;
    if (cfg.kind == "sybB") return bitableau_eulerian(cfg.n);
    throw CLI::ValidationError("--kind", "unknown kind " + cfg.kind);
}

inline int run_poly(const CommandConfig& cfg, std::ostream& out) {
    const auto p = named_polynomial(cfg, resolve_budget(cfg));
    if (cfg.format == "structured") {
        Report r("poly");
        r.info("poly", {{"kind", cfg.kind}, {"n", std::to_string(cfg.n)}, {"stat", cfg.stat}}, render(p));
        r.write_structured(out);
    } else {
        out << p.to_string() << '\n';
    }
    return kExitOk;
}

inline int run_gamma(const CommandConfig& cfg, std::ostream& out) {
    const auto budget = resolve_budget(cfg);
    if (cfg.n < 0) return emit(gamma_positivity_report(with_default(cfg.n_max, 30), budget), cfg, out);
    const int center = cfg.kind == "invA" ? cfg.n - 1 : cfg.n;
    if (center < 0) throw CLI::ValidationError("--n", "gamma of I_0 is undefined");
    const auto g = gamma_vector(named_polynomial(cfg, budget), center);
    if (cfg.format == "structured") {
        Report r("gamma");
        r.info("gamma", {{"kind", cfg.kind}, {"n", std::to_string(cfg.n)}, {"center-doubled", std::to_string(center)}},
               g.to_string(), g.nonnegative() ? "nonnegative" : "has-negative-entry");
        r.write_structured(out);
    } else {
        std::string s = g.to_string();
        for (auto& c : s)
            if (c == ',') c = ' ';
        out << s << '\n';
    }
    return kExitOk;
}

inline Report run_verify(const std::string& name, const CommandConfig& cfg) {
    const auto budget = resolve_budget(cfg);
    if (name == "recurrence") return verify_recurrence(with_default(cfg.n_max, 9), budget);
    if (name == "genfun-a") return verify_genfun_A(with_default(cfg.n_max, 8), with_default(cfg.m_max, 6), budget);
    if (name == "genfun-b") return verify_genfun_B(with_default(cfg.n_max, 8), with_default(cfg.k_max, 8), budget);
    if (name == "lemma31") return verify_lemma31(with_default(cfg.n_max, 4), with_default(cfg.m_max, 6), budget);
    if (name == "cauchy") return verify_cauchy_spec(with_default(cfg.n_max, 6), with_default(cfg.m_max, 4));
    if (name == "signed-schur") return verify_signed_schur_spec(with_default(cfg.n_max, 5), with_default(cfg.m_max, 4));
    if (name == "sdes-bijection") {
        const int nb = with_default(cfg.n_max, 6);
        return verify_sdes_bijection(nb, nb + 1, budget);
    }
    if (name == "proof-identity") return verify_proof_identity(with_default(cfg.n_max, 20));
    if (name == "transpose") {
        const int nb = with_default(cfg.n_max, 6);
        return verify_transpose(nb, nb + 1);
    }
    if (name == "conjecture-des") return check_des_statistic_conjecture(with_default(cfg.n_max, 7), budget);
    if (name == "unimodal") return verify_unimodality(with_default(cfg.n_max, 40));
    if (name == "prefix-lemma") return check_guo_zeng_lemma(cfg.trials, with_default(cfg.n_max, 8), cfg.seed);
    throw CLI::ValidationError("verify", "unknown check " + name);
}

}  // namespace detail

inline const std::vector<std::string>& verify_names() {
    static const std::vector<std::string> names{"recurrence", "genfun-a",       "genfun-b",  "lemma31",
                                                "cauchy",     "signed-schur",   "sdes-bijection",
                                                "proof-identity", "transpose", "conjecture-des",
                                                "unimodal",   "prefix-lemma"};
    return names;
}

/// Runs one command line (without the program name) and returns the exit status.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CommandConfig cfg;
    CLI::App app{"Eulinv: Eulerian distributions on involutions of S_n and B_n", "eulinv"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"plain", "structured"}));
    app.add_option("--budget", cfg.budget, "Maximum objects generated per enumeration")
        ->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()));

    auto add_n = [&](CLI::App* sub) { return sub->add_option("--n", cfg.n, "Size")->check(CLI::NonNegativeNumber); };
    auto add_n_max = [&](CLI::App* sub) {
        return sub->add_option("--n-max", cfg.n_max, "Largest size checked")->check(CLI::NonNegativeNumber);
    };
    auto add_stat = [&](CLI::App* sub) {
        sub->add_option("--stat", cfg.stat, "Descent statistic on B_n")->check(CLI::IsMember({"desB", "desCoxeter"}));
    };

    auto* poly = app.add_subcommand("poly", "Print a distribution, coefficients lowest degree first");
    poly->add_option("--kind", cfg.kind, "invA | invB | fullA | fullB | recB | sybB")
        ->check(CLI::IsMember({"invA", "invB", "fullA", "fullB", "recB", "sybB"}));
    add_n(poly)->required();
    add_stat(poly);

    auto* gamma = app.add_subcommand("gamma", "Print a gamma-vector, or a positivity report with --n-max");
    gamma->add_option("--kind", cfg.kind, "invA | invB | recB")->check(CLI::IsMember({"invA", "invB", "recB"}));
    add_stat(gamma);
    auto* gamma_n = add_n(gamma);
    auto* gamma_n_max = add_n_max(gamma);
    gamma_n->excludes(gamma_n_max);

    std::string verify_name;
    auto* verify = app.add_subcommand("verify", "Run a verification sweep");
    verify->require_subcommand(1);
    for (const auto& name : verify_names()) {
        auto* sub = verify->add_subcommand(name);
        add_n_max(sub);
        if (name == "genfun-a" || name == "lemma31" || name == "cauchy" || name == "signed-schur")
            sub->add_option("--m-max", cfg.m_max)->check(CLI::NonNegativeNumber);
        if (name == "genfun-b") sub->add_option("--k-max", cfg.k_max)->check(CLI::NonNegativeNumber);
        if (name == "prefix-lemma") {
            sub->add_option("--trials", cfg.trials)->check(CLI::NonNegativeNumber);
            sub->add_option("--seed", cfg.seed);
        }
        sub->callback([&verify_name, name] { verify_name = name; });
    }

    auto* counterexample = app.add_subcommand("counterexample", "Non-log-concavity witnesses");
    counterexample->require_subcommand(1);
    auto* r89 = counterexample->add_subcommand("r89", "Non-log-concavity of r(89, .)");

    auto* table = app.add_subcommand("table", "Compare computed values with the small-n reference tables");

    std::vector<const char*> argv{"eulinv"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (poly->parsed()) return detail::run_poly(cfg, out);
        if (gamma->parsed()) return detail::run_gamma(cfg, out);
        if (verify->parsed()) return detail::emit(detail::run_verify(verify_name, cfg), cfg, out);
        if (r89->parsed()) return detail::emit(verify_counterexample_89(8, detail::resolve_budget(cfg)), cfg, out);
        if (table->parsed()) return detail::emit(reference_table_report(detail::resolve_budget(cfg)), cfg, out);
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InexactDivision& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace eulinv::cli
