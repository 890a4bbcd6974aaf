// Command-line front end: evaluate Farhi arithmetic functions, compute least
// periods with per-prime breakdowns, reproduce the reference tables, print
// closed-form periods, and run the verification suites.
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "farhi/closedforms.hpp"
#include "farhi/errors.hpp"
#include "farhi/instance.hpp"
#include "farhi/report_json.hpp"
#include "farhi/table.hpp"
#include "farhi/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitHypothesis = 3;
constexpr int kExitBudget = 4;

farhi::Int parse_int_arg(const std::string& text, const char* what) {
    try {
        return farhi::Int(text, 10);
    } catch (const std::invalid_argument&) {
        throw farhi::Error(std::string("invalid ") + what + ": '" + text + "'");
    }
}

std::string period_line(const farhi::PeriodReport& report) {
    const std::string factored = report.T_factored.to_string();
    const std::string value = farhi::to_decimal(report.T);
    if (factored == value) return "T = " + value;
    return "T = " + factored + " = " + value;
}

void print_period_report(const farhi::PeriodReport& report) {
    std::cout << "f = " << report.f_text << ", k = " << report.k << "\n";
    std::cout << "C = " << farhi::to_decimal(report.C) << "\n";
    for (const farhi::PrimeLocalReport& local : report.locals) {
        std::cout << "p = " << farhi::to_decimal(local.p) << ": e_p = " << local.e_p
                  << ", T_p = " << farhi::to_decimal(local.T_p);
        if (local.counterexample)
            std::cout << " (h differs at n = " << farhi::to_decimal(*local.counterexample)
                      << " under the next smaller power)";
        std::cout << "\n";
    }
    std::cout << period_line(report) << "\n";
}

unsigned long oracle_budget_from_env(unsigned long fallback) {
    const char* env = std::getenv("FARHI_ORACLE_BUDGET");
    if (env == nullptr || *env == '\0') return fallback;
    try {
        return std::stoul(env);
    } catch (const std::exception&) {
        throw farhi::Error(std::string("invalid FARHI_ORACLE_BUDGET: '") + env + "'");
    }
}

int run(int argc, char** argv) {
    CLI::App app{"Farhi arithmetic functions: exact evaluation and least periods"};
    app.require_subcommand(1);

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "evaluate g_{k,f}(n) (extended at zero-set points)");
    std::string eval_poly, eval_n;
    unsigned eval_k = 0;
    eval_cmd->add_option("--poly", eval_poly, "polynomial f, e.g. \"x^2+1\"")->required();
    eval_cmd->add_option("--k", eval_k, "window length k >= 0")->required();
    eval_cmd->add_option("--n", eval_n, "evaluation point")->required();

    // period
    auto* period_cmd = app.add_subcommand("period", "least period of g_{k,f} with per-prime breakdown");
    std::string period_poly;
    unsigned period_k = 0;
    bool period_json = false;
    period_cmd->add_option("--poly", period_poly, "polynomial f")->required();
    period_cmd->add_option("--k", period_k, "window length k >= 0")->required();
    period_cmd->add_flag("--json", period_json, "emit the JSON report");

    // table
    auto* table_cmd = app.add_subcommand("table", "grid of factored least periods over a template");
    farhi::table::TableSpec spec;
    std::string format_name = "markdown";
    table_cmd->add_option("--template", spec.poly_template,
                          "polynomial template with a {b} placeholder")->required();
    table_cmd->add_option("--b-from", spec.b_from, "first b (default 1)");
    table_cmd->add_option("--b-to", spec.b_to, "last b (default 6)");
    table_cmd->add_option("--k-from", spec.k_from, "first k (default 1)");
    table_cmd->add_option("--k-to", spec.k_to, "last k (default 6)");
    table_cmd->add_option("--format", format_name, "json|csv|markdown (default markdown)")
        ->check(CLI::IsMember({"json", "csv", "markdown"}));

    // closed-form
    auto* closed_cmd = app.add_subcommand("closed-form",
                                          "closed-form least periods (f = x, a*x+b, spaced products)");
    unsigned long closed_k = 0;
    std::string closed_a, closed_b;
    bool closed_spaced = false;
    closed_cmd->add_option("--k", closed_k, "window length k")->required();
    closed_cmd->add_option("--a", closed_a, "leading coefficient a >= 1");
    closed_cmd->add_option("--b", closed_b, "constant term b, coprime to a");
    closed_cmd->add_flag("--spaced", closed_spaced, "period of the spaced product g_{k,a}");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the verification suites");
    std::string suite = "small";
    verify_cmd->add_option("--suite", suite, "small|full (default small)")
        ->check(CLI::IsMember({"small", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    if (*eval_cmd) {
        farhi::FarhiInstance inst(farhi::IntPoly::parse(eval_poly), eval_k);
        farhi::Int n = parse_int_arg(eval_n, "--n");
        if (inst.in_zero_set(n))
            std::cerr << "note: n = " << farhi::to_decimal(n)
                      << " is in the zero set; printing the extended value (shifted by "
                         "multiples of C = "
                      << farhi::to_decimal(inst.C()) << ")\n";
        std::cout << farhi::to_decimal(g_eval_ext(inst, n)) << "\n";
        return kExitOk;
    }

    if (*period_cmd) {
        farhi::FarhiInstance inst(farhi::IntPoly::parse(period_poly), period_k);
        farhi::PeriodReport report = least_period(inst);
        if (period_json)
            std::cout << farhi::report_to_json(report).dump(2) << "\n";
        else
            print_period_report(report);
        return kExitOk;
    }

    if (*table_cmd) {
        if (format_name == "json") spec.format = farhi::table::Format::kJson;
        else if (format_name == "csv") spec.format = farhi::table::Format::kCsv;
        else spec.format = farhi::table::Format::kMarkdown;
        std::cout << farhi::table::render_table(spec, farhi::table::compute_table(spec));
        return kExitOk;
    }

    if (*closed_cmd) {
        farhi::arith::Factorization result;
        const bool has_a = !closed_a.empty(), has_b = !closed_b.empty();
        if (closed_spaced) {
            if (!has_a || has_b)
                throw farhi::Error("closed-form --spaced needs --a and no --b");
            result = farhi::closedforms::spaced_T(closed_k, parse_int_arg(closed_a, "--a"));
        } else if (has_b) {
            if (!has_a) throw farhi::Error("closed-form --b needs --a");
            result = farhi::closedforms::linear_T(closed_k, parse_int_arg(closed_a, "--a"),
                                                  parse_int_arg(closed_b, "--b"));
        } else if (has_a) {
            throw farhi::Error("closed-form --a needs --b (linear family) or --spaced");
        } else {
            result = farhi::closedforms::farhi_kane_T(closed_k);
        }
        const std::string factored = result.to_string();
        const std::string value = farhi::to_decimal(result.value());
        if (factored == value) std::cout << "T = " << value << "\n";
        else std::cout << "T = " << factored << " = " << value << "\n";
        return kExitOk;
    }

    if (*verify_cmd) {
        const bool full = suite == "full";
        const unsigned long budget = oracle_budget_from_env(full ? 1000000UL : 10000UL);
        std::vector<farhi::verify::CheckResult> results = farhi::verify::run_suite(full, budget);
        unsigned passed = 0;
        for (const farhi::verify::CheckResult& r : results) {
            std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.name;
            if (!r.detail.empty()) std::cout << " - " << r.detail;
            std::cout << "\n";
            passed += r.pass ? 1 : 0;
        }
        std::cout << "passed " << passed << "/" << results.size() << " checks\n";
        return passed == results.size() ? kExitOk : kExitVerifyFailure;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const farhi::HypothesisViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const farhi::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const farhi::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
}
