#ifndef FARHI_POLYARITH_HPP
#define FARHI_POLYARITH_HPP

#include <string>
#include <string_view>
#include <vector>

#include "farhi/numbers.hpp"

namespace farhi::polyarith {

/// Dense univariate polynomial over Z, little-endian coefficients
/// (coeffs()[i] is the coefficient of x^i). Canonical form drops trailing
/// zeros, so the zero polynomial has an empty coefficient vector and
/// degree() == -1.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(Int constant);
    explicit IntPoly(std::vector<Int> coeffs);

    static IntPoly monomial(Int coefficient, std::size_t degree);

    /// Parses the grammar
    ///   poly := ['+'|'-'] term (('+'|'-') term)*
    ///   term := INT | INT '*'? 'x' ('^' UINT)? | 'x' ('^' UINT)?
    /// Whitespace is ignored and repeated powers are summed.
    /// Throws ParseError with a byte position on malformed input.
    static IntPoly parse(std::string_view text);

    /// Canonical form: descending powers, explicit '*', " - " for negative
    /// follow-on terms, e.g. "x^2 - 3*x + 1". The zero polynomial is "0".
    std::string to_string() const;

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    /// Coefficient of x^i (0 beyond the degree).
    const Int& coeff(std::size_t i) const;
    const Int& leading() const;

    /// Exact value f(n) by Horner evaluation.
    Int operator()(const Int& n) const;

    /// f(x + t) by iterated synthetic division (Horner shift).
    IntPoly shifted(const Int& t) const;

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-() const;
    IntPoly operator*(const Int& s) const;
    IntPoly pow(unsigned e) const;

    bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }

private:
    void normalize();
    std::vector<Int> coeffs_;
};

/// Dense univariate polynomial over Q; rationals are kept canonical
/// (reduced, positive denominator). Only what the Euclidean gcd needs.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs);
    explicit RatPoly(const IntPoly& p);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    const Rat& leading() const;

    RatPoly monic() const;
    /// Remainder of *this by divisor (long division over Q).
    RatPoly remainder(const RatPoly& divisor) const;

    bool operator==(const RatPoly& o) const { return coeffs_ == o.coeffs_; }

private:
    void normalize();
    std::vector<Rat> coeffs_;
};

/// Explicit witness that c lies in the ideal (f, g) of Z[x]:
/// a*f + b*g = c with c > 0.
struct BezoutCertificate {
    IntPoly a;
    IntPoly b;
    Int c;

    bool verifies(const IntPoly& f, const IntPoly& g) const;
};

/// Monic gcd in Q[x] via the Euclidean algorithm; constant 1 iff coprime.
/// Rejects the pair (0, 0).
RatPoly rat_gcd(const IntPoly& f, const IntPoly& g);

/// Sylvester resultant by fraction-free (Bareiss) elimination.
/// Nonzero iff f and g are coprime over Q. Rejects zero polynomials.
Int resultant(const IntPoly& f, const IntPoly& g);

/// Smallest positive constant found in the ideal (f, g) of Z[x], with a
/// verified certificate. Uses a Hermite-normal-form reduction of the
/// coefficient lattice spanned by {x^j f} u {x^j g} in degrees <= N,
/// growing N from deg f + deg g - 1 until the constant is unchanged for
/// deg f + deg g consecutive increments. Membership is unconditional
/// (the certificate is re-verified); minimality is best effort.
/// Requires rat_gcd(f, g) = 1.
BezoutCertificate ideal_int_generator(const IntPoly& f, const IntPoly& g);

/// All integer roots, ascending. Candidates are divisors of the lowest
/// nonzero coefficient after factoring out x^m. Rejects the zero polynomial.
std::vector<Int> integer_roots(const IntPoly& f);

struct PowerDecomposition {
    IntPoly base;
    unsigned exponent;
};

/// Writes f = base^r with r maximal (r = 1 when f is not a proper power).
/// Rejects constants and the zero polynomial.
PowerDecomposition perfect_power_decompose(const IntPoly& f);

}  // namespace farhi::polyarith

#endif
