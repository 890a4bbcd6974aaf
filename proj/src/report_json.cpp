#include "farhi/report_json.hpp"

#include "farhi/errors.hpp"

namespace farhi {

using nlohmann::json;

json report_to_json(const PeriodReport& report) {
    json locals = json::array();
    for (const PrimeLocalReport& l : report.locals) {
        locals.push_back({{"p", to_decimal(l.p)},
                          {"e_p", l.e_p},
                          {"T_p", to_decimal(l.T_p)}});
    }
    json factored = json::array();
    for (const auto& [p, e] : report.T_factored.factors())
        factored.push_back(json::array({to_decimal(p), e}));
    return json{{"f", report.f_text}, {"k", report.k},   {"C", to_decimal(report.C)},
                {"locals", locals},   {"T", to_decimal(report.T)},
                {"T_factored", factored}};
}

PeriodReport report_from_json(const json& j) {
    PeriodReport report;
    report.f_text = j.at("f").get<std::string>();
    report.k = j.at("k").get<unsigned>();
    report.C = Int(j.at("C").get<std::string>(), 10);
    for (const json& l : j.at("locals")) {
        PrimeLocalReport local;
        local.p = Int(l.at("p").get<std::string>(), 10);
        local.e_p = l.at("e_p").get<unsigned>();
        local.T_p = Int(l.at("T_p").get<std::string>(), 10);
        report.locals.push_back(std::move(local));
    }
    report.T = Int(j.at("T").get<std::string>(), 10);
    std::vector<std::pair<Int, unsigned>> factors;
    for (const json& pe : j.at("T_factored"))
        factors.emplace_back(Int(pe.at(0).get<std::string>(), 10), pe.at(1).get<unsigned>());
    report.T_factored = arith::Factorization::from_factors(std::move(factors));
    return report;
}

bool operator==(const PrimeLocalReport& a, const PrimeLocalReport& b) {
    return a.p == b.p && a.e_p == b.e_p && a.T_p == b.T_p;
}

bool operator==(const PeriodReport& a, const PeriodReport& b) {
    return a.f_text == b.f_text && a.k == b.k && a.C == b.C && a.locals == b.locals &&
           a.T == b.T && a.T_factored == b.T_factored;
}

}  // namespace farhi
