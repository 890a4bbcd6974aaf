#ifndef FARHI_INSTANCE_HPP
#define FARHI_INSTANCE_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "farhi/arith.hpp"
#include "farhi/numbers.hpp"
#include "farhi/polyarith.hpp"

namespace farhi {

using polyarith::BezoutCertificate;
using polyarith::IntPoly;

/// A validated (f, k) pair for the arithmetic function
///   g(n) = |f(n) f(n+1) ... f(n+k)| / lcm(f(n), ..., f(n+k)).
/// Construction checks that f(x) and f(x+i) are coprime over Q for every
/// 1 <= i <= k, computes certified ideal constants C_i with
/// a_i f(x) + b_i f(x+i) = C_i, their lcm C (a period of g), and the zero
/// set { n : f(n+i) = 0 for some 0 <= i <= k }.
/// Constant nonzero f is accepted as a degenerate instance (g == |c|^k).
class FarhiInstance {
public:
    FarhiInstance(IntPoly f, unsigned k);

    const IntPoly& f() const { return f_; }
    unsigned k() const { return k_; }
    const std::vector<BezoutCertificate>& constants() const { return constants_; }
    const Int& C() const { return C_; }
    const arith::Factorization& C_factored() const { return C_factored_; }
    const std::set<Int>& zero_set() const { return zero_set_; }

    bool in_zero_set(const Int& n) const { return zero_set_.count(n) != 0; }
    /// Least n' = n + a*C, a >= 0, whose span-window [n', n'+span] avoids
    /// every root of f. span defaults to k.
    Int clear_of_zeros(Int n, std::optional<unsigned> span = std::nullopt) const;

private:
    IntPoly f_;
    unsigned k_;
    std::vector<BezoutCertificate> constants_;
    Int C_;
    arith::Factorization C_factored_;
    std::set<Int> zero_set_;
    std::set<Int> roots_;
};

/// Per-prime summary: e_p bounds the period of h = v_p(g) by p^{e_p};
/// T_p is the least period of h (a power of p). When T_p > 1,
/// counterexample holds an n with h(n) != h(n + T_p/p).
struct PrimeLocalReport {
    Int p;
    unsigned e_p = 0;
    Int T_p = 1;
    std::optional<Int> counterexample;
};

struct PeriodReport {
    std::string f_text;
    unsigned k = 0;
    Int C = 1;
    std::vector<PrimeLocalReport> locals;  // every p | C with T_p > 1 or e_p > 0
    Int T = 1;
    arith::Factorization T_factored;
};

/// Exact g value; throws ZeroWindow when n is in the zero set.
Int g_eval(const FarhiInstance& inst, const Int& n);

/// Periodic extension: g at n + a*C for the least a >= 0 clearing the
/// window. Agrees with g_eval off the zero set.
Int g_eval_ext(const FarhiInstance& inst, const Int& n);

/// gcd(|f(n)|, |f(n+i)|) with gcd(a, 0) = |a|; 1 <= i <= k.
Int d_i(const FarhiInstance& inst, unsigned i, const Int& n);

/// h(n) = v_p(g(n)) computed as sum of window valuations minus their max,
/// on a zero-free shifted window.
unsigned h_eval(const FarhiInstance& inst, const Int& p, const Int& n);

/// Same value by counting levels: sum over t >= 1 of
/// max(0, #{m in window : p^t | f(m)} - 1). Equals h_eval everywhere.
unsigned h_eval_counting(const FarhiInstance& inst, const Int& p, const Int& n);

/// e_p = max valuation of pairwise window gcds over one scanning window
/// n in [1, p^{v_p(C)}], i in [1, k]. Zero when p does not divide C.
unsigned e_p_compute(const FarhiInstance& inst, const Int& p);

/// Least power of p that is a period of h, found by descending from the
/// proven period p^{e_p} and testing over one full window.
PrimeLocalReport prime_least_period(const FarhiInstance& inst, const Int& p);

/// T_p = 1 criterion: for every n in [1, p^{e_p}], either
/// v_p(gcd(|f(n)|, |f(n+k+1)|)) >= max_{1<=i<=k} v_p(f(n+i)), or
/// v_p(f(n)) = v_p(f(n+k+1)) < that max.
bool criterion_trivial_period(const FarhiInstance& inst, const Int& p);

/// T_p = p^{e_p} criterion: some window n0 in [1, p^{e_p}] has
/// #{m : p^{e_p} | f(m)} != #{m : p^{e_p} | f(m + p^{e_p - 1})}.
/// Rejects e_p = 0.
bool criterion_max_period(const FarhiInstance& inst, const Int& p);

/// Least period of g as the product of the per-prime least periods over
/// the primes dividing C.
PeriodReport least_period(const FarhiInstance& inst);

constexpr unsigned long kDefaultOracleBudget = 1'000'000;

/// Brute-force least period: the smallest divisor d of C with
/// g(n) = g(n+d) across a full window n in [1, C]. Exact, and independent
/// of the per-prime engine. Throws BudgetExceeded when C > budget.
Int oracle_least_period(const FarhiInstance& inst,
                        unsigned long budget = kDefaultOracleBudget);

}  // namespace farhi

#endif
