#include "farhi/polyarith.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <stdexcept>

#include "farhi/arith.hpp"
#include "farhi/errors.hpp"

namespace farhi::polyarith {

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(Int constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly IntPoly::monomial(Int coefficient, std::size_t degree) {
    std::vector<Int> c(degree + 1, Int(0));
    c[degree] = std::move(coefficient);
    return IntPoly(std::move(c));
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Int& IntPoly::coeff(std::size_t i) const {
    static const Int zero(0);
    return i < coeffs_.size() ? coeffs_[i] : zero;
}

const Int& IntPoly::leading() const {
    if (coeffs_.empty()) throw Error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Int IntPoly::operator()(const Int& n) const {
    Int r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * n + *it;
    return r;
}

IntPoly IntPoly::shifted(const Int& t) const {
    std::vector<Int> a = coeffs_;
    const std::size_t n = a.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j-- > i;)
            a[j] += t * a[j + 1];
    return IntPoly(std::move(a));
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> out(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator-() const {
    std::vector<Int> out = coeffs_;
    for (Int& c : out) c = -c;
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<Int> out(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const Int& s) const {
    std::vector<Int> out = coeffs_;
    for (Int& c : out) c *= s;
    return IntPoly(std::move(out));
}

IntPoly IntPoly::pow(unsigned e) const {
    IntPoly r{Int(1)};
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

// ------------------------------------------------------------- parse/print

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return text[pos];
    }
};

Int parse_uint(Cursor& cur) {
    cur.skip_ws();
    std::size_t start = cur.pos;
    while (cur.pos < cur.text.size() &&
           std::isdigit(static_cast<unsigned char>(cur.text[cur.pos])))
        ++cur.pos;
    if (cur.pos == start) throw ParseError("expected a number", start);
    return Int(std::string(cur.text.substr(start, cur.pos - start)), 10);
}

// term := INT | INT '*'? 'x' ('^' UINT)? | 'x' ('^' UINT)?
void parse_term(Cursor& cur, int sign, std::vector<Int>& acc) {
    if (cur.done()) throw ParseError("expected a term", cur.pos);
    char c = cur.peek();
    Int coefficient(1);
    bool saw_int = false;
    if (std::isdigit(static_cast<unsigned char>(c))) {
        coefficient = parse_uint(cur);
        saw_int = true;
    } else if (std::isalpha(static_cast<unsigned char>(c)) && c != 'x') {
        throw ParseError(std::string("unknown variable '") + c + "'; only x is allowed",
                         cur.pos);
    } else if (c != 'x') {
        throw ParseError(std::string("unexpected character '") + c + "'", cur.pos);
    }
    std::size_t power = 0;
    if (!cur.done()) {
        char n = cur.peek();
        if (saw_int && n == '*') {
            ++cur.pos;
            if (cur.done()) throw ParseError("expected x after '*'", cur.pos);
            n = cur.peek();
            if (std::isalpha(static_cast<unsigned char>(n)) && n != 'x')
                throw ParseError(std::string("unknown variable '") + n +
                                     "'; only x is allowed",
                                 cur.pos);
            if (n != 'x') throw ParseError("expected x after '*'", cur.pos);
        }
        if (!cur.done() && cur.peek() == 'x') {
            ++cur.pos;
            power = 1;
            if (!cur.done() && cur.peek() == '^') {
                ++cur.pos;
                std::size_t at = cur.pos;
                Int e = parse_uint(cur);
                if (!e.fits_ulong_p() || e.get_ui() > 100000)
                    throw ParseError("exponent too large", at);
                power = e.get_ui();
            }
        } else if (!saw_int) {
            throw ParseError("expected a term", cur.pos);
        } else if (!cur.done() && std::isalpha(static_cast<unsigned char>(cur.peek()))) {
            throw ParseError(std::string("unknown variable '") + cur.peek() +
                                 "'; only x is allowed",
                             cur.pos);
        }
    }
    if (acc.size() <= power) acc.resize(power + 1, Int(0));
    acc[power] += sign * coefficient;
}

}  // namespace

IntPoly IntPoly::parse(std::string_view text) {
    Cursor cur{text};
    if (cur.done()) throw ParseError("empty polynomial", 0);
    std::vector<Int> acc;
    int sign = 1;
    if (cur.peek() == '+' || cur.peek() == '-') {
        sign = cur.peek() == '-' ? -1 : 1;
        ++cur.pos;
    }
    parse_term(cur, sign, acc);
    while (!cur.done()) {
        char c = cur.peek();
        if (c != '+' && c != '-')
            throw ParseError(std::string("expected '+' or '-', got '") + c + "'", cur.pos);
        sign = c == '-' ? -1 : 1;
        ++cur.pos;
        parse_term(cur, sign, acc);
    }
    return IntPoly(std::move(acc));
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Int& c = coeffs_[i];
        if (c == 0) continue;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        Int a = int_abs(c);
        if (i == 0) {
            out += to_decimal(a);
        } else {
            if (a != 1) out += to_decimal(a) + "*";
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

// ---------------------------------------------------------------- RatPoly

RatPoly::RatPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    for (Rat& c : coeffs_) c.canonicalize();
    normalize();
}

RatPoly::RatPoly(const IntPoly& p) {
    coeffs_.reserve(p.coeffs().size());
    for (const Int& c : p.coeffs()) coeffs_.emplace_back(c);
    normalize();
}

void RatPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rat& RatPoly::leading() const {
    if (coeffs_.empty()) throw Error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

RatPoly RatPoly::monic() const {
    if (is_zero()) return *this;
    std::vector<Rat> out = coeffs_;
    Rat lead = coeffs_.back();
    for (Rat& c : out) {
        c /= lead;
        c.canonicalize();
    }
    return RatPoly(std::move(out));
}

RatPoly RatPoly::remainder(const RatPoly& divisor) const {
    if (divisor.is_zero()) throw Error("polynomial division by zero");
    std::vector<Rat> r = coeffs_;
    const auto& d = divisor.coeffs_;
    while (r.size() >= d.size() && !r.empty()) {
        Rat q = r.back() / d.back();
        q.canonicalize();
        std::size_t off = r.size() - d.size();
        for (std::size_t i = 0; i < d.size(); ++i) {
            r[off + i] -= q * d[i];
            r[off + i].canonicalize();
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    return RatPoly(std::move(r));
}

// ------------------------------------------------------------------ gcd

RatPoly rat_gcd(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() && g.is_zero()) throw Error("gcd(0, 0) is undefined");
    RatPoly a(f), b(g);
    while (!b.is_zero()) {
        RatPoly r = a.remainder(b);
        a = b;
        b = r;
    }
    return a.monic();
}

// ------------------------------------------------------------- resultant

Int resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) throw Error("resultant of the zero polynomial");
    const int m = f.degree(), n = g.degree();
    if (m == 0 && n == 0) return 1;
    if (m == 0) return int_pow(f.leading(), n);
    if (n == 0) return int_pow(g.leading(), m);

    const std::size_t s = static_cast<std::size_t>(m + n);
    std::vector<std::vector<Int>> mat(s, std::vector<Int>(s, Int(0)));
    for (int row = 0; row < n; ++row)
        for (int j = 0; j <= m; ++j) mat[row][row + j] = f.coeff(m - j);
    for (int row = 0; row < m; ++row)
        for (int j = 0; j <= n; ++j) mat[n + row][row + j] = g.coeff(n - j);

    // Bareiss fraction-free elimination; every division is exact.
    int sign = 1;
    Int prev(1);
    for (std::size_t k = 0; k + 1 < s; ++k) {
        std::size_t pivot = k;
        while (pivot < s && mat[pivot][k] == 0) ++pivot;
        if (pivot == s) return 0;
        if (pivot != k) {
            std::swap(mat[pivot], mat[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < s; ++i) {
            for (std::size_t j = k + 1; j < s; ++j) {
                Int t = mat[k][k] * mat[i][j] - mat[i][k] * mat[k][j];
                mpz_divexact(mat[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            mat[i][k] = 0;
        }
        prev = mat[k][k];
    }
    return sign > 0 ? mat[s - 1][s - 1] : Int(-mat[s - 1][s - 1]);
}

// ------------------------------------------------- ideal integer generator

bool BezoutCertificate::verifies(const IntPoly& f, const IntPoly& g) const {
    return c > 0 && a * f + b * g == IntPoly(c);
}

namespace {

struct LatticeRow {
    std::vector<Int> vec;  // columns: x^N down to x^0
    IntPoly a, b;          // companion cofactors, row = a*f + b*g
};

// Row-style Hermite reduction; returns the certificate read off the row
// supported on the constant column only, if the lattice contains one.
std::optional<BezoutCertificate> hnf_constant(const IntPoly& f, const IntPoly& g,
                                              std::size_t N) {
    const int df = f.degree(), dg = g.degree();
    std::vector<LatticeRow> rows;
    for (std::size_t j = 0; j + df <= N; ++j) {
        LatticeRow r{std::vector<Int>(N + 1, Int(0)), IntPoly::monomial(Int(1), j),
                     IntPoly()};
        for (int i = 0; i <= df; ++i) r.vec[N - (i + j)] = f.coeff(i);
        rows.push_back(std::move(r));
    }
    for (std::size_t j = 0; j + dg <= N; ++j) {
        LatticeRow r{std::vector<Int>(N + 1, Int(0)), IntPoly(),
                     IntPoly::monomial(Int(1), j)};
        for (int i = 0; i <= dg; ++i) r.vec[N - (i + j)] = g.coeff(i);
        rows.push_back(std::move(r));
    }

    auto combine = [](LatticeRow& dst, const LatticeRow& src, const Int& q) {
        for (std::size_t i = 0; i < dst.vec.size(); ++i) dst.vec[i] -= q * src.vec[i];
        dst.a = dst.a - src.a * q;
        dst.b = dst.b - src.b * q;
    };

    std::size_t r = 0;
    for (std::size_t col = 0; col <= N && r < rows.size(); ++col) {
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t i = r; i < rows.size(); ++i) {
                if (rows[i].vec[col] == 0) continue;
                if (best == rows.size() ||
                    int_abs(rows[i].vec[col]) < int_abs(rows[best].vec[col]))
                    best = i;
            }
            if (best == rows.size()) break;
            std::swap(rows[r], rows[best]);
            bool clean = true;
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i].vec[col] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), rows[i].vec[col].get_mpz_t(),
                           rows[r].vec[col].get_mpz_t());
                if (q != 0) combine(rows[i], rows[r], q);
                if (rows[i].vec[col] != 0) clean = false;
            }
            if (clean) {
                if (rows[r].vec[col] < 0) {
                    for (Int& x : rows[r].vec) x = -x;
                    rows[r].a = -rows[r].a;
                    rows[r].b = -rows[r].b;
                }
                // reduce the rows above to keep cofactors small
                for (std::size_t i = 0; i < r; ++i) {
                    if (rows[i].vec[col] == 0) continue;
                    Int q;
                    mpz_fdiv_q(q.get_mpz_t(), rows[i].vec[col].get_mpz_t(),
                               rows[r].vec[col].get_mpz_t());
                    if (q != 0) combine(rows[i], rows[r], q);
                }
                ++r;
                break;
            }
        }
    }

    for (const LatticeRow& row : rows) {
        bool constant_only = row.vec[N] != 0;
        for (std::size_t i = 0; i < N && constant_only; ++i)
            if (row.vec[i] != 0) constant_only = false;
        if (constant_only) return BezoutCertificate{row.a, row.b, row.vec[N]};
    }
    return std::nullopt;
}

}  // namespace

BezoutCertificate ideal_int_generator(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero())
        throw Error("ideal generator requires nonzero polynomials");
    if (rat_gcd(f, g).degree() != 0)
        throw Error("ideal generator requires a pair coprime over Q");

    if (f.is_constant() && g.is_constant()) {
        Int c, s, t;
        mpz_gcdext(c.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), f.coeff(0).get_mpz_t(),
                   g.coeff(0).get_mpz_t());
        BezoutCertificate cert{IntPoly(s), IntPoly(t), c};
        if (!cert.verifies(f, g)) throw std::logic_error("Bezout certificate failed to verify");
        return cert;
    }

    const std::size_t d = static_cast<std::size_t>(f.degree() + g.degree());
    const std::size_t need = std::max<std::size_t>(d, 1);
    std::size_t N = d > 0 ? d - 1 : 1;
    std::optional<BezoutCertificate> best;
    std::size_t streak = 0;
    while (true) {
        std::optional<BezoutCertificate> got = hnf_constant(f, g, N);
        if (got) {
            if (best && got->c == best->c) {
                ++streak;
            } else {
                best = got;
                streak = 0;
            }
        }
        ++N;
        if (best && streak >= need) break;
    }
    if (!best->verifies(f, g))
        throw std::logic_error("Bezout certificate failed to verify");
    return *best;
}

// ----------------------------------------------------------- integer roots

std::vector<Int> integer_roots(const IntPoly& f) {
    if (f.is_zero()) throw Error("integer roots of the zero polynomial");
    std::size_t m = 0;
    while (f.coeff(m) == 0) ++m;
    std::vector<Int> deflated(f.coeffs().begin() + static_cast<long>(m), f.coeffs().end());
    IntPoly q{std::move(deflated)};
    std::vector<Int> roots;
    if (m > 0) roots.push_back(0);
    if (!q.is_constant()) {
        for (const Int& d : arith::divisors(arith::factorize(int_abs(q.coeff(0))))) {
            if (q(d) == 0) roots.push_back(d);
            if (q(-d) == 0) roots.push_back(-d);
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

// ------------------------------------------------------ perfect power

namespace {

std::optional<IntPoly> extract_power_base(const IntPoly& f, unsigned r) {
    const int deg = f.degree();
    const int m = deg / static_cast<int>(r);
    const Int& lead = f.leading();
    if (r % 2 == 0 && lead < 0) return std::nullopt;
    Int root;
    Int alead = int_abs(lead);
    if (mpz_root(root.get_mpz_t(), alead.get_mpz_t(), r) == 0) return std::nullopt;
    if (lead < 0) root = -root;

    std::vector<Int> base(static_cast<std::size_t>(m) + 1, Int(0));
    base[static_cast<std::size_t>(m)] = root;
    Int denom = Int(r) * int_pow(root, r - 1);
    for (int j = 1; j <= m; ++j) {
        IntPoly partial{std::vector<Int>(base)};
        Int have = partial.pow(r).coeff(static_cast<std::size_t>(deg - j));
        Int delta = f.coeff(static_cast<std::size_t>(deg - j)) - have;
        if (!mpz_divisible_p(delta.get_mpz_t(), denom.get_mpz_t())) return std::nullopt;
        Int b;
        mpz_divexact(b.get_mpz_t(), delta.get_mpz_t(), denom.get_mpz_t());
        base[static_cast<std::size_t>(m - j)] = b;
    }
    IntPoly candidate{std::move(base)};
    if (candidate.pow(r) == f) return candidate;
    return std::nullopt;
}

}  // namespace

PowerDecomposition perfect_power_decompose(const IntPoly& f) {
    if (f.is_constant()) throw Error("perfect power decomposition needs a nonconstant input");
    const unsigned deg = static_cast<unsigned>(f.degree());
    for (unsigned r = deg; r >= 2; --r) {
        if (deg % r != 0) continue;
        if (auto base = extract_power_base(f, r)) return {*base, r};
    }
    return {f, 1};
}

}  // namespace farhi::polyarith
