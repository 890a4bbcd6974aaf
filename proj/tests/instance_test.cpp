#include <doctest.h>

#include "farhi/errors.hpp"
#include "farhi/instance.hpp"

using namespace farhi;

namespace {
FarhiInstance make(const char* text, unsigned k) {
    return FarhiInstance(IntPoly::parse(text), k);
}
}  // namespace

TEST_CASE("instance construction") {
    SUBCASE("f = x, k = 3") {
        FarhiInstance inst = make("x", 3);
        REQUIRE(inst.constants().size() == 3);
        CHECK(inst.constants()[0].c == 1);
        CHECK(inst.constants()[1].c == 2);
        CHECK(inst.constants()[2].c == 3);
        CHECK(inst.C() == 6);
        std::set<Int> expect{Int(-3), Int(-2), Int(-1), Int(0)};
        CHECK(inst.zero_set() == expect);
    }
    SUBCASE("f = x^2-1, k = 1") {
        FarhiInstance inst = make("x^2-1", 1);
        std::set<Int> expect{Int(-2), Int(-1), Int(0), Int(1)};
        CHECK(inst.zero_set() == expect);
    }
    SUBCASE("f = x^2+1, k = 1") {
        CHECK(make("x^2+1", 1).C() == 5);
    }
    SUBCASE("hypothesis violation") {
        CHECK_THROWS_AS(make("x^2+x", 1), HypothesisViolation);
        try {
            make("x^2+x", 1);
        } catch (const HypothesisViolation& e) {
            CHECK(e.shift() == 1);
        }
    }
    SUBCASE("zero polynomial") { CHECK_THROWS_AS(make("0", 2), ZeroPolynomial); }
    SUBCASE("constant degenerate") {
        FarhiInstance inst = make("-6", 3);
        CHECK(inst.C() == 1);
        CHECK(inst.zero_set().empty());
        CHECK(g_eval(inst, Int(11)) == 216);  // |c|^k
        CHECK(least_period(inst).T == 1);
    }
}

TEST_CASE("g_eval") {
    FarhiInstance x1 = make("x", 1);
    for (long n = 1; n <= 20; ++n) CHECK(g_eval(x1, Int(n)) == 1);
    CHECK(g_eval(make("x", 2), Int(2)) == 2);  // 2*3*4 / lcm = 24/12
    CHECK(g_eval(make("x^2+1", 1), Int(2)) == 5);
    CHECK(g_eval(make("x", 0), Int(9)) == 1);  // k = 0
    CHECK_THROWS_AS(g_eval(make("x", 2), Int(0)), ZeroWindow);
}

TEST_CASE("g_eval_ext") {
    FarhiInstance inst = make("x", 2);
    CHECK(g_eval_ext(inst, Int(0)) == 2);
    CHECK(g_eval_ext(inst, Int(-1)) == 1);
    for (long n = 1; n <= 30; ++n) CHECK(g_eval_ext(inst, Int(n)) == g_eval(inst, Int(n)));
}

TEST_CASE("d_i") {
    CHECK(d_i(make("x^2+1", 1), 1, Int(2)) == 5);
    FarhiInstance x1 = make("x", 1);
    for (long n = -5; n <= 5; ++n) CHECK(d_i(x1, 1, Int(n)) == 1);
    CHECK(d_i(make("x", 4), 4, Int(4)) == 4);
}

TEST_CASE("h_eval and h_eval_counting") {
    CHECK(h_eval(make("x", 4), Int(2), Int(2)) == 2);
    FarhiInstance x1 = make("x", 1);
    for (long n = -3; n <= 6; ++n) CHECK(h_eval(x1, Int(3), Int(n)) == 0);
    CHECK(h_eval(make("x^2+1", 1), Int(5), Int(2)) == 1);

    for (const char* text : {"x", "x^2+1", "x^3+1"}) {
        FarhiInstance inst = FarhiInstance(IntPoly::parse(text), 3);
        for (const Int& p : {Int(2), Int(3), Int(5), Int(7), Int(13)})
            for (long n = -20; n <= 40; ++n)
                CHECK(h_eval(inst, p, Int(n)) == h_eval_counting(inst, p, Int(n)));
    }
    // p not dividing C contributes nothing
    FarhiInstance q = make("x^2+1", 3);
    for (long n = 1; n <= 50; ++n) {
        CHECK(h_eval_counting(q, Int(7), Int(n)) == 0);
        CHECK(h_eval_counting(q, Int(11), Int(n)) == 0);
    }
    // k = 0 means g == 1 and h == 0
    FarhiInstance k0 = make("x^2+1", 0);
    for (long n = 1; n <= 10; ++n) CHECK(h_eval_counting(k0, Int(5), Int(n)) == 0);
    CHECK_THROWS_AS(h_eval(q, Int(6), Int(1)), Error);
}

TEST_CASE("e_p") {
    CHECK(e_p_compute(make("x", 4), Int(2)) == 2);
    CHECK(e_p_compute(make("x^2+1", 1), Int(5)) == 1);
    CHECK(e_p_compute(make("x", 1), Int(2)) == 0);
    CHECK(e_p_compute(make("x^2+4", 4), Int(2)) == 3);
}

TEST_CASE("prime_least_period") {
    PrimeLocalReport r = prime_least_period(make("x^2+1", 1), Int(5));
    CHECK(r.e_p == 1);
    CHECK(r.T_p == 5);
    REQUIRE(r.counterexample.has_value());

    PrimeLocalReport r2 = prime_least_period(make("x", 3), Int(2));
    CHECK(r2.T_p == 1);
    CHECK_FALSE(r2.counterexample.has_value());

    PrimeLocalReport r3 = prime_least_period(make("x", 4), Int(2));
    CHECK(r3.e_p == 2);
    CHECK(r3.T_p == 4);

    // the recorded witness really separates h under the next smaller power
    FarhiInstance inst = make("x^2+4", 4);
    PrimeLocalReport r4 = prime_least_period(inst, Int(2));
    CHECK(r4.e_p == 3);
    CHECK(r4.T_p == 4);
    REQUIRE(r4.counterexample.has_value());
    Int w = *r4.counterexample;
    CHECK(h_eval(inst, Int(2), w) != h_eval(inst, Int(2), w + r4.T_p / 2));
}

TEST_CASE("period criteria") {
    CHECK(criterion_trivial_period(make("x", 3), Int(2)));
    CHECK_FALSE(criterion_trivial_period(make("x", 2), Int(2)));
    CHECK_FALSE(criterion_trivial_period(make("x^2+1", 1), Int(5)));

    CHECK(criterion_max_period(make("x", 4), Int(2)));
    CHECK_FALSE(criterion_max_period(make("x", 3), Int(2)));
    CHECK(criterion_max_period(make("x^2+1", 1), Int(5)));
    CHECK_THROWS_AS(criterion_max_period(make("x", 1), Int(2)), Error);
}

TEST_CASE("least_period") {
    // brute-force-confirmed values
    CHECK(least_period(make("x", 4)).T == 12);
    CHECK(least_period(make("x^2+1", 3)).T == 65);
    CHECK(least_period(make("x^3+1", 1)).T == 7);
    CHECK(least_period(make("x^3+2", 1)).T == 109);
    CHECK(least_period(make("x^2+4", 4)).T == 1700);

    PeriodReport r = least_period(make("x^2+1", 3));
    CHECK(r.C == 1560);
    CHECK(r.T_factored.to_string() == "5·13");
    Int prod = 1;
    for (const PrimeLocalReport& l : r.locals) prod *= l.T_p;
    CHECK(prod == r.T);
    CHECK(r.f_text == "x^2 + 1");
}

TEST_CASE("oracle_least_period") {
    CHECK(oracle_least_period(make("x", 2)) == 2);
    CHECK(oracle_least_period(make("x^2+1", 2)) == 10);
    CHECK(oracle_least_period(make("x", 1)) == 1);
    CHECK_THROWS_AS(oracle_least_period(make("x^2+1", 3), 1000), BudgetExceeded);

    for (const char* text : {"x^2+2", "x^2-2", "x^3+1"}) {
        FarhiInstance inst(IntPoly::parse(text), 2);
        CHECK(least_period(inst).T == oracle_least_period(inst));
    }
}
