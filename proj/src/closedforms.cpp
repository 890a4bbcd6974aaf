#include "farhi/closedforms.hpp"

#include <vector>

#include "farhi/errors.hpp"

namespace farhi::closedforms {

using arith::Factorization;

unsigned delta_p(unsigned long k, const Int& p) {
    if (!arith::is_prime(p)) throw Error(to_decimal(p) + " is not prime");
    if (p > Int(k)) throw Error("delta_p needs p <= k");
    // max_{1<=i<=k} v_p(i) is the largest e with p^e <= k
    unsigned max_vp = 0;
    Int q = p;
    while (q <= Int(k)) {
        ++max_vp;
        q *= p;
    }
    return arith::v_p(Int(k + 1), p) >= max_vp ? 0 : max_vp;
}

namespace {

std::vector<Int> primes_up_to(unsigned long k) {
    std::vector<Int> out;
    for (unsigned long p = 2; p <= k; ++p)
        if (arith::is_prime(Int(p))) out.emplace_back(p);
    return out;
}

}  // namespace

Factorization farhi_kane_T(unsigned long k) {
    std::vector<std::pair<Int, unsigned>> factors;
    for (const Int& p : primes_up_to(k)) {
        unsigned d = delta_p(k, p);
        if (d > 0) factors.emplace_back(p, d);
    }
    return Factorization::from_factors(std::move(factors));
}

Factorization linear_T(unsigned long k, const Int& a, const Int& b) {
    if (a < 1) throw Error("linear_T needs a >= 1");
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (g != 1)
        throw HypothesisViolation("linear_T needs gcd(a, b) = 1, got gcd = " + to_decimal(g), 0);
    std::vector<std::pair<Int, unsigned>> factors;
    for (const Int& p : primes_up_to(k)) {
        if (mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t())) continue;
        unsigned d = delta_p(k, p);
        if (d > 0) factors.emplace_back(p, d);
    }
    return Factorization::from_factors(std::move(factors));
}

Factorization spaced_T(unsigned long k, const Int& a) {
    if (a < 1) throw Error("spaced_T needs a >= 1");
    return arith::factorize(a).times(farhi_kane_T(k));
}

Int g_spaced_eval(unsigned long k, const Int& a, const Int& n) {
    if (n < 1) throw Error("g_spaced_eval needs n >= 1");
    if (a < 1) throw Error("g_spaced_eval needs a >= 1");
    std::vector<Int> vals;
    vals.reserve(k + 1);
    for (unsigned long j = 0; j <= k; ++j) vals.push_back(n + Int(j) * a);
    Int num = 1;
    for (const Int& v : vals) num *= v;
    Int g;
    mpz_divexact(g.get_mpz_t(), num.get_mpz_t(), arith::big_lcm(vals).get_mpz_t());
    return g;
}

Int g_k_recursive(unsigned long k, const Int& n) {
    if (n < 1) throw Error("g_k_recursive needs n >= 1");
    Int g = 1;
    for (unsigned long j = 1; j <= k; ++j) {
        Int rhs = (n + Int(j)) * g;
        Int fact = factorial(j);
        mpz_gcd(g.get_mpz_t(), fact.get_mpz_t(), rhs.get_mpz_t());
    }
    return g;
}

polyarith::PowerDecomposition reduce_perfect_power(const polyarith::IntPoly& f) {
    return polyarith::perfect_power_decompose(f);
}

}  // namespace farhi::closedforms
