#ifndef FARHI_REPORT_JSON_HPP
#define FARHI_REPORT_JSON_HPP

#include <json.hpp>

#include "farhi/instance.hpp"

namespace farhi {

/// Schema (big integers as decimal strings so 64-bit consumers stay exact):
/// {"f": str, "k": int, "C": str,
///  "locals": [{"p": str, "e_p": int, "T_p": str}, ...],
///  "T": str, "T_factored": [[p_str, e_int], ...]}
nlohmann::json report_to_json(const PeriodReport& report);
PeriodReport report_from_json(const nlohmann::json& j);

bool operator==(const PrimeLocalReport& a, const PrimeLocalReport& b);
bool operator==(const PeriodReport& a, const PeriodReport& b);

}  // namespace farhi

#endif
