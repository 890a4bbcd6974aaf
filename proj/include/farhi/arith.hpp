#ifndef FARHI_ARITH_HPP
#define FARHI_ARITH_HPP

#include <string>
#include <utility>
#include <vector>

#include "farhi/numbers.hpp"

namespace farhi::arith {

/// A positive integer as an ordered prime -> exponent map.
/// Invariants: primes strictly ascending and certified prime, exponents >= 1,
/// product of prime powers equals value(). The empty factorization is 1.
class Factorization {
public:
    Factorization() : value_(1) {}

    /// Builds from (prime, exponent) pairs; validates and sorts.
    static Factorization from_factors(std::vector<std::pair<Int, unsigned>> factors);

    const std::vector<std::pair<Int, unsigned>>& factors() const { return factors_; }
    const Int& value() const { return value_; }
    bool is_one() const { return factors_.empty(); }

    unsigned exponent_of(const Int& p) const;

    /// Product of two factored values (exponents add).
    Factorization times(const Factorization& other) const;

    /// Display form, e.g. "2^2·3·5^2·17"; "1" for the empty product.
    std::string to_string() const;

    bool operator==(const Factorization& other) const { return factors_ == other.factors_; }

private:
    std::vector<std::pair<Int, unsigned>> factors_;
    Int value_;
};

/// Deterministic primality test: Miller-Rabin with a witness set proven
/// exact for all 64-bit inputs, strong probable-prime testing with 40
/// fixed-seed bases above that.
bool is_prime(const Int& n);

/// Exact exponent of prime p in |n|. Rejects n = 0 and non-prime p.
unsigned v_p(const Int& n, const Int& p);

/// Complete factorization of n >= 1: trial division through 10^6, then
/// Pollard-Brent rho with certified prime cofactors. Deterministic.
Factorization factorize(const Int& n);

/// All divisors of the factored value, ascending, each exactly once.
std::vector<Int> divisors(const Factorization& f);

/// gcd of absolute values; gcd(a, 0) = |a|; all-zero list yields 0.
Int big_gcd(const std::vector<Int>& xs);

/// lcm of absolute values; rejects zero entries; singleton lcm is |a|.
Int big_lcm(const std::vector<Int>& xs);

}  // namespace farhi::arith

#endif
