#ifndef FARHI_CLOSEDFORMS_HPP
#define FARHI_CLOSEDFORMS_HPP

#include "farhi/arith.hpp"
#include "farhi/numbers.hpp"
#include "farhi/polyarith.hpp"

namespace farhi::closedforms {

/// Exponent of p in the least period of g_k for f(x) = x:
/// 0 when v_p(k+1) >= max_{1<=i<=k} v_p(i) (= floor(log_p k)),
/// otherwise that max. Requires p prime, p <= k.
unsigned delta_p(unsigned long k, const Int& p);

/// Factored least period of g_k: prod over primes p <= k of p^{delta_p(k)}.
/// 1 for k <= 1.
arith::Factorization farhi_kane_T(unsigned long k);

/// Factored least period for f(x) = a x + b, gcd(a, b) = 1: the delta
/// exponent also drops to 0 for p | a.
arith::Factorization linear_T(unsigned long k, const Int& a, const Int& b);

/// Factored least period a * T_k of the spaced product
/// g_{k,a}(n) = |n (n+a) ... (n+ka)| / lcm(n, n+a, ..., n+ka).
arith::Factorization spaced_T(unsigned long k, const Int& a);

/// Exact spaced-product value; n >= 1, a >= 1.
Int g_spaced_eval(unsigned long k, const Int& a, const Int& n);

/// g_k by the recursion g_k(n) = gcd(k!, (n+k) g_{k-1}(n)), g_0 == 1.
Int g_k_recursive(unsigned long k, const Int& n);

/// Perfect-power reduction: period questions for f = base^r reduce to the
/// base, and g_{k,f} = g_{k,base}^r pointwise.
polyarith::PowerDecomposition reduce_perfect_power(const polyarith::IntPoly& f);

}  // namespace farhi::closedforms

#endif
