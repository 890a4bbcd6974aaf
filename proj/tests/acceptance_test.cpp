// Acceptance suite: runs the ten exit criteria and prints one line per
// criterion. A criterion fails if its checks fail or its time bound is
// exceeded. Usage: acceptance_test [--criterion N]
#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "farhi/verify.hpp"

namespace {

struct Criterion {
    int number;
    std::string title;
    double time_limit_seconds;  // 0 = no bound
    std::function<farhi::verify::CheckResult()> check;
};

bool run_criterion(const Criterion& c) {
    const auto start = std::chrono::steady_clock::now();
    farhi::verify::CheckResult result = c.check();
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = result.pass;
    std::string timing;
    if (c.time_limit_seconds > 0 && elapsed >= c.time_limit_seconds) {
        pass = false;
        timing = " [exceeded " + std::to_string(c.time_limit_seconds) + "s bound]";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", elapsed);
    std::cout << "criterion " << c.number << " (" << c.title << "): "
              << (pass ? "PASS" : "FAIL") << " in " << buf << timing;
    if (!result.detail.empty()) std::cout << " - " << result.detail;
    std::cout << "\n";
    return pass;
}

}  // namespace

int main(int argc, char** argv) {
    using farhi::verify::CheckResult;
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
    }

    const std::vector<Criterion> criteria = {
        {1, "quadratic family table, 36 cells, exact", 10.0,
         [] { return farhi::verify::table_quadratic_reference(); }},
        {2, "cubic family table, 36 cells, exact", 60.0,
         [] { return farhi::verify::table_cubic_reference(); }},
        {3, "closed form = engine = oracle for f = x, k in [0,8]", 5.0,
         [] { return farhi::verify::farhi_kane_triple_agreement(); }},
        {4, "quadratic family ideal constants vs reference formulas", 5.0,
         [] { return farhi::verify::quadratic_constants_protocol(); }},
        {5, "cubic family ideal constants vs reference formulas", 5.0,
         [] { return farhi::verify::cubic_constants_protocol(); }},
        {6, "engine equals brute-force oracle on instances with C <= 10^4", 60.0,
         [] { return farhi::verify::oracle_equivalence(10000); }},
        {7, "valuation sum equals counting form on all scanned points", 0.0,
         [] { return farhi::verify::counting_identity(); }},
        {8, "trivial/maximal period criteria match the engine", 0.0,
         [] { return farhi::verify::criteria_consistency(); }},
        {9, "linear closed form matches the engine on the (k,a,b) grid", 30.0,
         [] { return farhi::verify::linear_closed_form_agreement(); }},
        {10, "spaced-product periods minimal; perfect-power reduction exact", 30.0,
         [] { return farhi::verify::spaced_and_power_reduction(); }},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        if (only != 0 && c.number != only) continue;
        if (!run_criterion(c)) ++failures;
    }
    if (only == 0)
        std::cout << (failures == 0 ? "all criteria passed"
                                    : std::to_string(failures) + " criteria failed")
                  << "\n";
    return failures == 0 ? 0 : 1;
}
