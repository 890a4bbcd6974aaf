#include "farhi/arith.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>

#include "farhi/errors.hpp"

namespace farhi::arith {

namespace {

constexpr std::uint64_t kTrialBound = 1'000'000;

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        std::vector<bool> sieve(kTrialBound + 1, true);
        std::vector<std::uint32_t> out;
        for (std::uint64_t i = 2; i <= kTrialBound; ++i) {
            if (!sieve[i]) continue;
            out.push_back(static_cast<std::uint32_t>(i));
            for (std::uint64_t j = i * i; j <= kTrialBound; j += i) sieve[j] = false;
        }
        return out;
    }();
    return primes;
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

// Witness set exact for every n < 3.3 * 10^24, in particular all 64-bit n.
constexpr std::uint64_t kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool miller_rabin_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : kWitnesses) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : kWitnesses) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

bool strong_probable_prime(const Int& n, const Int& a) {
    Int d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    Int x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return true;
    for (unsigned long r = 1; r < s; ++r) {
        x = (x * x) % n;
        if (x == n - 1) return true;
    }
    return false;
}

bool miller_rabin_big(const Int& n) {
    for (std::uint64_t p : kWitnesses) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return n == p;
        if (!strong_probable_prime(n, Int(p))) return false;
    }
    // n has no small witnesses; fall back to 40 reproducible random bases.
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    for (int i = 0; i < 40; ++i) {
        Int a = Int(static_cast<unsigned long>(rng() >> 16) + 2) % (n - 3) + 2;
        if (!strong_probable_prime(n, a)) return false;
    }
    return true;
}

std::uint64_t pollard_brent_u64(std::uint64_t n, std::uint64_t seed) {
    if (n % 2 == 0) return 2;
    std::uint64_t y = seed % n, c = (seed >> 17 | 1) % n, m = 128;
    if (c == 0) c = 1;
    std::uint64_t g = 1, r = 1, q = 1, x = 0, ys = 0;
    while (g == 1) {
        x = y;
        for (std::uint64_t i = 0; i < r; ++i) y = (mulmod_u64(y, y, n) + c) % n;
        std::uint64_t k = 0;
        while (k < r && g == 1) {
            ys = y;
            std::uint64_t lim = std::min(m, r - k);
            for (std::uint64_t i = 0; i < lim; ++i) {
                y = (mulmod_u64(y, y, n) + c) % n;
                std::uint64_t diff = x > y ? x - y : y - x;
                q = mulmod_u64(q, diff == 0 ? 1 : diff, n);
            }
            g = std::gcd(q, n);
            k += lim;
        }
        r *= 2;
    }
    if (g == n) {
        g = 1;
        while (g == 1) {
            ys = (mulmod_u64(ys, ys, n) + c) % n;
            std::uint64_t diff = x > ys ? x - ys : ys - x;
            g = std::gcd(diff == 0 ? n : diff, n);
        }
    }
    return g;
}

Int pollard_brent_big(const Int& n, std::uint64_t seed) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    Int y = Int(seed) % n, c = Int((seed >> 17) | 1) % n;
    if (c == 0) c = 1;
    Int g = 1, q = 1, x = 0, ys = 0;
    std::uint64_t r = 1, m = 128;
    while (g == 1) {
        x = y;
        for (std::uint64_t i = 0; i < r; ++i) y = (y * y + c) % n;
        std::uint64_t k = 0;
        while (k < r && g == 1) {
            ys = y;
            std::uint64_t lim = std::min(m, r - k);
            for (std::uint64_t i = 0; i < lim; ++i) {
                y = (y * y + c) % n;
                Int diff = int_abs(x - y);
                if (diff != 0) q = (q * diff) % n;
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += lim;
        }
        r *= 2;
    }
    if (g == n) {
        g = 1;
        while (g == 1) {
            ys = (ys * ys + c) % n;
            Int diff = int_abs(x - ys);
            mpz_gcd(g.get_mpz_t(), diff == 0 ? n.get_mpz_t() : diff.get_mpz_t(),
                    n.get_mpz_t());
        }
    }
    return g;
}

void factor_rec(const Int& n, std::vector<Int>& out) {
    if (n == 1) return;
    if (is_prime(n)) { out.push_back(n); return; }
    Int d = n;
    std::uint64_t seed = 2;
    while (d == n) {
        d = fits_ulong(n) ? Int(pollard_brent_u64(n.get_ui(), seed))
                          : pollard_brent_big(n, seed);
        ++seed;
    }
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

Factorization Factorization::from_factors(std::vector<std::pair<Int, unsigned>> factors) {
    std::sort(factors.begin(), factors.end());
    Factorization f;
    for (const auto& [p, e] : factors) {
        if (e == 0) continue;
        if (!is_prime(p)) throw Error("factorization entry " + to_decimal(p) + " is not prime");
        if (!f.factors_.empty() && f.factors_.back().first == p)
            throw Error("duplicate prime " + to_decimal(p) + " in factorization");
        f.factors_.emplace_back(p, e);
        f.value_ *= int_pow(p, e);
    }
    return f;
}

unsigned Factorization::exponent_of(const Int& p) const {
    for (const auto& [q, e] : factors_)
        if (q == p) return e;
    return 0;
}

Factorization Factorization::times(const Factorization& other) const {
    std::vector<std::pair<Int, unsigned>> merged = factors_;
    for (const auto& [p, e] : other.factors_) {
        bool found = false;
        for (auto& [q, d] : merged)
            if (q == p) { d += e; found = true; break; }
        if (!found) merged.emplace_back(p, e);
    }
    return from_factors(std::move(merged));
}

std::string Factorization::to_string() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (const auto& [p, e] : factors_) {
        if (!out.empty()) out += "·";
        out += to_decimal(p);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (fits_ulong(n)) return miller_rabin_u64(n.get_ui());
    return miller_rabin_big(n);
}

unsigned v_p(const Int& n, const Int& p) {
    if (n == 0) throw Error("v_p undefined at 0");
    if (!is_prime(p)) throw Error("v_p requires a prime, got " + to_decimal(p));
    Int m = int_abs(n);
    return static_cast<unsigned>(mpz_remove(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t()));
}

Factorization factorize(const Int& n) {
    if (n < 1) throw Error("factorize requires n >= 1, got " + to_decimal(n));
    std::vector<std::pair<Int, unsigned>> factors;
    Int m = n;
    for (std::uint32_t p : small_primes()) {
        if (m == 1) break;
        if (Int(p) * p > m) break;
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            unsigned e = static_cast<unsigned>(
                mpz_remove(m.get_mpz_t(), m.get_mpz_t(), Int(p).get_mpz_t()));
            factors.emplace_back(Int(p), e);
        }
    }
    if (m > 1) {
        std::vector<Int> rest;
        factor_rec(m, rest);
        std::sort(rest.begin(), rest.end());
        for (std::size_t i = 0; i < rest.size();) {
            std::size_t j = i;
            while (j < rest.size() && rest[j] == rest[i]) ++j;
            factors.emplace_back(rest[i], static_cast<unsigned>(j - i));
            i = j;
        }
    }
    return Factorization::from_factors(std::move(factors));
}

std::vector<Int> divisors(const Factorization& f) {
    std::vector<Int> divs{1};
    for (const auto& [p, e] : f.factors()) {
        std::size_t base = divs.size();
        Int q = 1;
        for (unsigned i = 1; i <= e; ++i) {
            q *= p;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * q);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

Int big_gcd(const std::vector<Int>& xs) {
    if (xs.empty()) throw Error("big_gcd of empty list");
    Int g = 0;
    for (const Int& x : xs) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

Int big_lcm(const std::vector<Int>& xs) {
    if (xs.empty()) throw Error("big_lcm of empty list");
    Int l = 1;
    for (const Int& x : xs) {
        if (x == 0) throw Error("big_lcm with zero entry");
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_mpz_t());
    }
    return l;
}

}  // namespace farhi::arith
