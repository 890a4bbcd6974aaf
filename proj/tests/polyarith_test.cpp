#include <doctest.h>

#include "farhi/errors.hpp"
#include "farhi/polyarith.hpp"

using farhi::Error;
using farhi::Int;
using farhi::ParseError;
using namespace farhi::polyarith;

namespace {
IntPoly P(const char* text) { return IntPoly::parse(text); }
std::vector<Int> C(std::initializer_list<long> cs) {
    std::vector<Int> out;
    for (long c : cs) out.emplace_back(c);
    return out;
}
}  // namespace

TEST_CASE("parse basics") {
    CHECK(P("x^2+1").coeffs() == C({1, 0, 1}));
    CHECK(P("2*x - x + 3").coeffs() == C({3, 1}));
    CHECK(P("0").is_zero());
    CHECK(P("0").degree() == -1);
    CHECK(P("-x^2 + 3*x").coeffs() == C({0, 3, -1}));
    CHECK(P("x + x").coeffs() == C({0, 2}));          // repeated powers summed
    CHECK(P(" - 4 ").coeffs() == C({-4}));
    CHECK(P("7x").coeffs() == C({0, 7}));             // optional '*'
    CHECK(P("x^3 - x^3").is_zero());
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(P(""), ParseError);
    CHECK_THROWS_AS(P("x^2 +"), ParseError);
    CHECK_THROWS_AS(P("x**2"), ParseError);
    CHECK_THROWS_AS(P("x^"), ParseError);
    CHECK_THROWS_AS(P("x^-2"), ParseError);
    CHECK_THROWS_AS(P("3 4"), ParseError);
    try {
        P("x^2 + y");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 6);
        CHECK(std::string(e.what()).find("only x is allowed") != std::string::npos);
    }
}

TEST_CASE("canonical print") {
    CHECK(P("1 - 3x + x^2").to_string() == "x^2 - 3*x + 1");
    CHECK(IntPoly().to_string() == "0");
    CHECK(P("-x").to_string() == "-x");
    CHECK(P("-1-x^2").to_string() == "-x^2 - 1");
    CHECK(P("5").to_string() == "5");
    CHECK(IntPoly::parse(P("2x^4-x^3+17").to_string()) == P("2x^4-x^3+17"));
}

TEST_CASE("eval") {
    CHECK(P("x^2+1")(Int(2)) == 5);
    CHECK(IntPoly()(Int(7)) == 0);
    CHECK(P("x^3+2")(Int(-1)) == 1);
}

TEST_CASE("shift") {
    CHECK(P("x^2+1").shifted(Int(1)) == P("x^2+2*x+2"));
    CHECK(P("x^2-3*x").shifted(Int(0)) == P("x^2-3*x"));
    CHECK(P("x").shifted(Int(4)) == P("x+4"));
    IntPoly f = P("3x^3 - x + 2");
    IntPoly s = f.shifted(Int(-5));
    for (long n = -10; n <= 10; ++n) CHECK(s(Int(n)) == f(Int(n - 5)));
}

TEST_CASE("rat_gcd") {
    CHECK(rat_gcd(P("x^2+x"), P("x^2+3*x+2")) == RatPoly(P("x+1")));
    CHECK(rat_gcd(P("x^2+1"), P("x^2+2*x+2")) == RatPoly(P("1")));
    // gcd(f, f) is monic f
    RatPoly m = rat_gcd(P("2*x^2+2"), P("2*x^2+2"));
    CHECK(m.degree() == 2);
    CHECK(m.leading() == 1);
    CHECK_THROWS_AS(rat_gcd(IntPoly(), IntPoly()), Error);
}

TEST_CASE("resultant") {
    CHECK(resultant(P("x"), P("x+5")) == 5);
    CHECK(resultant(P("x^2+1"), P("x^2+2*x+2")) == 5);
    CHECK(resultant(P("x^2+x"), P("x^2+3*x+2")) == 0);
    CHECK(resultant(P("7"), P("x^2+1")) == 49);
    CHECK_THROWS_AS(resultant(IntPoly(), P("x")), Error);
}

TEST_CASE("ideal_int_generator") {
    SUBCASE("consecutive integers") {
        BezoutCertificate cert = ideal_int_generator(P("x"), P("x+1"));
        CHECK(cert.c == 1);
        CHECK(cert.verifies(P("x"), P("x+1")));
    }
    SUBCASE("quadratic shift pair") {
        IntPoly f = P("x^2+1");
        BezoutCertificate cert = ideal_int_generator(f, f.shifted(Int(1)));
        CHECK(cert.c == 5);
        CHECK(cert.verifies(f, f.shifted(Int(1))));
    }
    SUBCASE("gap four") {
        BezoutCertificate cert = ideal_int_generator(P("x"), P("x+4"));
        CHECK(cert.c == 4);
        CHECK(cert.verifies(P("x"), P("x+4")));
    }
    SUBCASE("cubic shift pair is not the naive resultant") {
        IntPoly f = P("x^3+1");
        BezoutCertificate cert = ideal_int_generator(f, f.shifted(Int(1)));
        CHECK(cert.c == 14);
        CHECK(cert.verifies(f, f.shifted(Int(1))));
    }
    CHECK_THROWS_AS(ideal_int_generator(P("x^2+x"), P("x^2+3*x+2")), Error);
}

TEST_CASE("integer_roots") {
    CHECK(integer_roots(P("x^2-1")) == C({-1, 1}));
    CHECK(integer_roots(P("x^2+1")).empty());
    CHECK(integer_roots(P("x^3")) == C({0}));
    CHECK(integer_roots(P("x^3 - 2x^2 - x + 2")) == C({-1, 1, 2}));
    CHECK(integer_roots(P("2x + 1")).empty());
    CHECK_THROWS_AS(integer_roots(IntPoly()), Error);
}

TEST_CASE("perfect_power_decompose") {
    auto square = perfect_power_decompose(P("x^2+2*x+1"));
    CHECK(square.base == P("x+1"));
    CHECK(square.exponent == 2);

    auto not_power = perfect_power_decompose(P("x^2+1"));
    CHECK(not_power.base == P("x^2+1"));
    CHECK(not_power.exponent == 1);

    auto monomial = perfect_power_decompose(P("x^6"));
    CHECK(monomial.base == P("x"));
    CHECK(monomial.exponent == 6);

    auto scaled = perfect_power_decompose(P("8x^3 + 12x^2 + 6x + 1"));
    CHECK(scaled.base == P("2x+1"));
    CHECK(scaled.exponent == 3);

    auto negative = perfect_power_decompose(P("-x^3"));
    CHECK(negative.base == P("-x"));
    CHECK(negative.exponent == 3);

    CHECK_THROWS_AS(perfect_power_decompose(P("5")), Error);
    CHECK_THROWS_AS(perfect_power_decompose(IntPoly()), Error);
}
