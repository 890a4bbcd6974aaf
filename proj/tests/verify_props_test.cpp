#include <doctest.h>

#include "farhi/verify.hpp"

// Every module property suite must hold; failures print the offending check.
TEST_CASE("property suites") {
    for (const farhi::verify::CheckResult& r : farhi::verify::property_checks(10000)) {
        INFO(r.name << ": " << r.detail);
        CHECK(r.pass);
    }
}
