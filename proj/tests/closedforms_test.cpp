#include <doctest.h>

#include "farhi/closedforms.hpp"
#include "farhi/errors.hpp"
#include "farhi/instance.hpp"

using farhi::Error;
using farhi::HypothesisViolation;
using farhi::Int;
using namespace farhi::closedforms;

TEST_CASE("delta_p") {
    CHECK(delta_p(4, Int(2)) == 2);
    CHECK(delta_p(3, Int(2)) == 0);
    CHECK(delta_p(2, Int(2)) == 1);
    CHECK(delta_p(9, Int(3)) == 2);
    CHECK_THROWS_AS(delta_p(4, Int(5)), Error);
    CHECK_THROWS_AS(delta_p(4, Int(4)), Error);
}

TEST_CASE("farhi_kane_T") {
    const unsigned long expect[] = {1, 1, 2, 3, 12, 20, 60, 105, 280};
    for (unsigned long k = 0; k <= 8; ++k) CHECK(farhi_kane_T(k).value() == expect[k]);
    CHECK(farhi_kane_T(4).to_string() == "2^2·3");
}

TEST_CASE("linear_T") {
    CHECK(linear_T(2, Int(2), Int(1)).value() == 1);
    CHECK(linear_T(2, Int(3), Int(1)).value() == 2);
    for (unsigned long k = 0; k <= 6; ++k)
        CHECK(linear_T(k, Int(1), Int(0)) == farhi_kane_T(k));
    CHECK_THROWS_AS(linear_T(3, Int(2), Int(4)), HypothesisViolation);
}

TEST_CASE("spaced_T") {
    CHECK(spaced_T(2, Int(3)).value() == 6);
    CHECK(spaced_T(1, Int(7)).value() == 7);
    for (unsigned long k = 0; k <= 6; ++k) CHECK(spaced_T(k, Int(1)) == farhi_kane_T(k));
    CHECK(spaced_T(4, Int(6)).to_string() == "2^3·3^2");
}

TEST_CASE("g_spaced_eval") {
    CHECK(g_spaced_eval(2, Int(1), Int(2)) == 2);
    CHECK(g_spaced_eval(1, Int(4), Int(3)) == 1);  // gcd(3, 7) = 1
    CHECK(g_spaced_eval(2, Int(2), Int(2)) == 4);  // g_2(1) * 2^2
    CHECK_THROWS_AS(g_spaced_eval(2, Int(1), Int(0)), Error);
}

TEST_CASE("g_k_recursive") {
    for (long n = 1; n <= 30; ++n) CHECK(g_k_recursive(1, Int(n)) == 1);
    CHECK(g_k_recursive(2, Int(2)) == 2);
    CHECK(g_k_recursive(2, Int(1)) == 1);
    farhi::FarhiInstance x4(farhi::IntPoly::parse("x"), 4);
    for (long n = 1; n <= 60; ++n) CHECK(g_k_recursive(4, Int(n)) == g_eval(x4, Int(n)));
}

TEST_CASE("reduce_perfect_power") {
    auto r1 = reduce_perfect_power(farhi::IntPoly::parse("x^2"));
    CHECK(r1.base == farhi::IntPoly::parse("x"));
    CHECK(r1.exponent == 2);
    auto r2 = reduce_perfect_power(farhi::IntPoly::parse("x^2+1"));
    CHECK(r2.exponent == 1);
    auto r3 = reduce_perfect_power(farhi::IntPoly::parse("x^3+3*x^2+3*x+1"));
    CHECK(r3.base == farhi::IntPoly::parse("x+1"));
    CHECK(r3.exponent == 3);

    // the period of a power equals the period of its base (here T_{k,x^r} = T_k)
    farhi::FarhiInstance xsq(farhi::IntPoly::parse("x^2"), 4);
    CHECK(least_period(xsq).T == farhi_kane_T(4).value());
}
