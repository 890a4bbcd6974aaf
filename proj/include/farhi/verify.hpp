#ifndef FARHI_VERIFY_HPP
#define FARHI_VERIFY_HPP

#include <string>
#include <vector>

#include "farhi/instance.hpp"

namespace farhi::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Exit-criteria checks. The two table checks compare computed least
/// periods against the bundled reference tables and report every cell
/// that differs; the remainder are oracle/property gates.
CheckResult table_quadratic_reference();
CheckResult table_cubic_reference();
CheckResult farhi_kane_triple_agreement();
CheckResult quadratic_constants_protocol();
CheckResult cubic_constants_protocol();
CheckResult oracle_equivalence(unsigned long oracle_budget);
CheckResult counting_identity();
CheckResult criteria_consistency();
CheckResult linear_closed_form_agreement();
CheckResult spaced_and_power_reduction();

/// The ten exit-criteria checks, in order.
std::vector<CheckResult> acceptance_checks(unsigned long oracle_budget);

/// Module invariant suites (polynomials, integer arithmetic, the period
/// engine, closed forms, JSON round trip).
std::vector<CheckResult> property_checks(unsigned long oracle_budget);

/// small: property checks only (oracle capped at 10^4 by the caller).
/// full: property checks plus the acceptance checks.
std::vector<CheckResult> run_suite(bool full, unsigned long oracle_budget);

}  // namespace farhi::verify

#endif
