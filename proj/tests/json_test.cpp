#include <doctest.h>

#include "farhi/report_json.hpp"

using namespace farhi;

TEST_CASE("json schema") {
    FarhiInstance inst(IntPoly::parse("x^2+1"), 3);
    PeriodReport report = least_period(inst);
    nlohmann::json j = report_to_json(report);

    CHECK(j.at("f") == "x^2 + 1");
    CHECK(j.at("k") == 3);
    CHECK(j.at("C") == "1560");
    CHECK(j.at("T") == "65");
    REQUIRE(j.at("T_factored").size() == 2);
    CHECK(j.at("T_factored")[0][0] == "5");
    CHECK(j.at("T_factored")[0][1] == 1);
    // big integers travel as decimal strings
    for (const auto& local : j.at("locals")) {
        CHECK(local.at("p").is_string());
        CHECK(local.at("T_p").is_string());
        CHECK(local.at("e_p").is_number_unsigned());
    }
}

TEST_CASE("json round trip") {
    for (const char* text : {"x", "x^2 + 2", "x^3 + 1"}) {
        FarhiInstance inst(IntPoly::parse(text), 4);
        PeriodReport report = least_period(inst);
        CHECK(report_from_json(report_to_json(report)) == report);
    }
}

TEST_CASE("json determinism") {
    FarhiInstance inst(IntPoly::parse("x^3+1"), 2);
    CHECK(report_to_json(least_period(inst)).dump() ==
          report_to_json(least_period(inst)).dump());
}
