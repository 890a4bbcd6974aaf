#include "farhi/instance.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "farhi/errors.hpp"

namespace farhi {

using arith::big_lcm;
using arith::Factorization;
using arith::is_prime;
using arith::v_p;

FarhiInstance::FarhiInstance(IntPoly f, unsigned k) : f_(std::move(f)), k_(k), C_(1) {
    if (f_.is_zero()) throw ZeroPolynomial("the zero polynomial has no Farhi instance");
    if (!f_.is_constant()) {
        for (unsigned i = 1; i <= k_; ++i) {
            IntPoly gi = f_.shifted(Int(i));
            if (polyarith::rat_gcd(f_, gi).degree() != 0)
                throw HypothesisViolation(
                    "f(x) and f(x+" + std::to_string(i) + ") share a factor over Q: f = " +
                        f_.to_string(),
                    i);
            constants_.push_back(polyarith::ideal_int_generator(f_, gi));
            mpz_lcm(C_.get_mpz_t(), C_.get_mpz_t(), constants_.back().c.get_mpz_t());
        }
        for (const Int& r : polyarith::integer_roots(f_)) {
            roots_.insert(r);
            for (unsigned i = 0; i <= k_; ++i) zero_set_.insert(r - Int(i));
        }
    }
    C_factored_ = arith::factorize(C_);
}

Int FarhiInstance::clear_of_zeros(Int n, std::optional<unsigned> span) const {
    const unsigned s = span.value_or(k_);
    auto window_clear = [&](const Int& start) {
        for (unsigned i = 0; i <= s; ++i)
            if (roots_.count(start + Int(i))) return false;
        return true;
    };
    while (!window_clear(n)) n += C_;
    return n;
}

Int g_eval(const FarhiInstance& inst, const Int& n) {
    if (inst.in_zero_set(n))
        throw ZeroWindow("g undefined at n = " + to_decimal(n) +
                         " (window hits a root of f); use the extended evaluator");
    std::vector<Int> vals;
    vals.reserve(inst.k() + 1);
    for (unsigned i = 0; i <= inst.k(); ++i) vals.push_back(inst.f()(n + Int(i)));
    Int num = 1;
    for (const Int& v : vals) num *= int_abs(v);
    Int den = big_lcm(vals);
    Int g;
    mpz_divexact(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return g;
}

Int g_eval_ext(const FarhiInstance& inst, const Int& n) {
    return g_eval(inst, inst.clear_of_zeros(n));
}

Int d_i(const FarhiInstance& inst, unsigned i, const Int& n) {
    if (i < 1 || i > inst.k()) throw Error("d_i needs 1 <= i <= k");
    Int a = inst.f()(n), b = inst.f()(n + Int(i));
    assert(!(a == 0 && b == 0));
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

namespace {

void require_prime(const Int& p) {
    if (!is_prime(p)) throw Error(to_decimal(p) + " is not prime");
}

std::vector<unsigned> window_valuations(const FarhiInstance& inst, const Int& p,
                                        const Int& n, unsigned span) {
    std::vector<unsigned> w;
    w.reserve(span + 1);
    for (unsigned i = 0; i <= span; ++i) w.push_back(v_p(inst.f()(n + Int(i)), p));
    return w;
}

}  // namespace

unsigned h_eval(const FarhiInstance& inst, const Int& p, const Int& n) {
    require_prime(p);
    if (inst.k() == 0) return 0;
    Int m = inst.clear_of_zeros(n);
    std::vector<unsigned> w = window_valuations(inst, p, m, inst.k());
    unsigned sum = 0, max = 0;
    for (unsigned x : w) {
        sum += x;
        max = std::max(max, x);
    }
    return sum - max;
}

unsigned h_eval_counting(const FarhiInstance& inst, const Int& p, const Int& n) {
    require_prime(p);
    if (inst.k() == 0) return 0;
    Int m = inst.clear_of_zeros(n);
    std::vector<unsigned> w = window_valuations(inst, p, m, inst.k());
    unsigned t_max = *std::max_element(w.begin(), w.end());
    unsigned total = 0;
    for (unsigned t = 1; t <= t_max; ++t) {
        unsigned count = 0;
        for (unsigned x : w)
            if (x >= t) ++count;
        if (count > 1) total += count - 1;
    }
    return total;
}

unsigned e_p_compute(const FarhiInstance& inst, const Int& p) {
    require_prime(p);
    if (!mpz_divisible_p(inst.C().get_mpz_t(), p.get_mpz_t())) return 0;
    const unsigned E = v_p(inst.C(), p);
    const Int window = int_pow(p, E);
    unsigned best = 0;
    for (Int n = 1; n <= window; ++n) {
        for (unsigned i = 1; i <= inst.k(); ++i) {
            Int m = n;
            while (inst.f()(m) == 0 || inst.f()(m + Int(i)) == 0) m += inst.C();
            best = std::max(best, v_p(d_i(inst, i, m), p));
        }
    }
    return best;
}

PrimeLocalReport prime_least_period(const FarhiInstance& inst, const Int& p) {
    PrimeLocalReport report;
    report.p = p;
    report.e_p = e_p_compute(inst, p);
    if (report.e_p == 0) return report;
    const Int full = int_pow(p, report.e_p);
    unsigned t = report.e_p;
    while (t > 0) {
        const Int step = int_pow(p, t - 1);
        std::optional<Int> witness;
        for (Int n = 1; n <= full; ++n) {
            if (h_eval(inst, p, n) != h_eval(inst, p, n + step)) {
                witness = n;
                break;
            }
        }
        if (witness) {
            report.counterexample = witness;
            break;
        }
        --t;
    }
    report.T_p = int_pow(p, t);
    return report;
}

bool criterion_trivial_period(const FarhiInstance& inst, const Int& p) {
    require_prime(p);
    const unsigned e = e_p_compute(inst, p);
    const Int window = int_pow(p, e);
    for (Int n = 1; n <= window; ++n) {
        Int m = inst.clear_of_zeros(n, inst.k() + 1);
        std::vector<unsigned> w = window_valuations(inst, p, m, inst.k() + 1);
        unsigned inner_max = 0;
        for (unsigned i = 1; i <= inst.k(); ++i) inner_max = std::max(inner_max, w[i]);
        const bool dominated = std::min(w[0], w[inst.k() + 1]) >= inner_max;
        const bool balanced = w[0] == w[inst.k() + 1] && w[0] < inner_max;
        if (!dominated && !balanced) return false;
    }
    return true;
}

bool criterion_max_period(const FarhiInstance& inst, const Int& p) {
    require_prime(p);
    const unsigned e = e_p_compute(inst, p);
    if (e == 0) throw Error("criterion_max_period needs e_p >= 1");
    const Int window = int_pow(p, e);
    const Int step = int_pow(p, e - 1);
    const Int level = int_pow(p, e);
    for (Int n = 1; n <= window; ++n) {
        Int m = n;
        while (true) {
            bool clear = true;
            for (unsigned i = 0; i <= inst.k() && clear; ++i)
                if (inst.f()(m + Int(i)) == 0 || inst.f()(m + step + Int(i)) == 0)
                    clear = false;
            if (clear) break;
            m += inst.C();
        }
        unsigned base_count = 0, shifted_count = 0;
        for (unsigned i = 0; i <= inst.k(); ++i) {
            if (mpz_divisible_p(inst.f()(m + Int(i)).get_mpz_t(), level.get_mpz_t()))
                ++base_count;
            if (mpz_divisible_p(inst.f()(m + step + Int(i)).get_mpz_t(), level.get_mpz_t()))
                ++shifted_count;
        }
        if (base_count != shifted_count) return true;
    }
    return false;
}

PeriodReport least_period(const FarhiInstance& inst) {
    PeriodReport report;
    report.f_text = inst.f().to_string();
    report.k = inst.k();
    report.C = inst.C();
    report.T = 1;
    std::vector<std::pair<Int, unsigned>> t_factors;
    for (const auto& [p, e] : inst.C_factored().factors()) {
        (void)e;
        PrimeLocalReport local = prime_least_period(inst, p);
        report.T *= local.T_p;
        if (local.T_p > 1) t_factors.emplace_back(p, v_p(local.T_p, p));
        if (local.T_p > 1 || local.e_p > 0) report.locals.push_back(std::move(local));
    }
    report.T_factored = Factorization::from_factors(std::move(t_factors));
    assert(mpz_divisible_p(inst.C().get_mpz_t(), report.T.get_mpz_t()));
    return report;
}

Int oracle_least_period(const FarhiInstance& inst, unsigned long budget) {
    if (inst.C() > Int(budget))
        throw BudgetExceeded("oracle budget exceeded: C = " + to_decimal(inst.C()) +
                             " > " + std::to_string(budget));
    const unsigned long C = inst.C().get_ui();
    // g is >= 1 everywhere, so 0 marks an empty cache slot.
    std::vector<Int> cache(2 * C + 2, Int(0));
    auto g_at = [&](unsigned long n) -> const Int& {
        Int& slot = cache[n];
        if (slot == 0) slot = g_eval_ext(inst, Int(n));
        return slot;
    };
    for (const Int& div : arith::divisors(inst.C_factored())) {
        const unsigned long d = div.get_ui();
        bool period = true;
        for (unsigned long n = 1; n <= C; ++n) {
            if (g_at(n) != g_at(n + d)) {
                period = false;
                break;
            }
        }
        if (period) return div;
    }
    throw std::logic_error("C itself must be a period");
}

}  // namespace farhi
