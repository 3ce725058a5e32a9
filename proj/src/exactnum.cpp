#include "geodom/exactnum.hpp"

#include <cctype>
#include <cmath>

namespace geodom {

ParseError::ParseError(const std::string& what, int line, int column)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ", column " +
                                        std::to_string(column) + ": " + what
                                  : what),
      line_(line),
      column_(column) {}

namespace exactnum {

int sign(const Rational& r) { return sgn(r); }

Rational make_rational(long num, long den) {
    if (den == 0) throw ArithmeticError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// Cursor over a literal; reports errors with the offset into the literal.
struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return done() ? '\0' : text[pos]; }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " in number literal '" + std::string(text) + "'", 0,
                         static_cast<int>(pos) + 1);
    }
    bool accept(std::string_view tok) {
        if (text.substr(pos, tok.size()) == tok) {
            pos += tok.size();
            return true;
        }
        return false;
    }
    Integer digits() {
        std::size_t start = pos;
        while (!done() && is_digit(peek())) ++pos;
        if (start == pos) fail("expected digits");
        return Integer(std::string(text.substr(start, pos - start)));
    }
    // [sign] digits [/ digits]
    Rational rational(bool allow_sign) {
        int s = 1;
        if (allow_sign) {
            if (accept("-")) s = -1;
            else accept("+");
        }
        Integer num = digits();
        Integer den = 1;
        if (accept("/")) den = digits();
        if (den == 0) fail("zero denominator");
        Rational r(num * s, den);
        r.canonicalize();
        return r;
    }
};

std::string strip_spaces(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

// Simplest rational in the open interval (lo, hi), or (lo, +inf) if hi_inf.
Rational simplest_between(const Rational& lo, const Rational& hi, bool hi_inf) {
    if (!hi_inf && hi <= 0) return -simplest_between(-hi, -lo, false);
    if (lo < 0) return Rational(0);
    Integer fl = floor(lo);
    Rational next(fl + 1);
    if (hi_inf || next < hi) return next;
    // lo and hi share the integer part fl; recurse on reciprocals of the
    // fractional parts.
    Rational lo_frac = lo - fl;
    Rational hi_frac = hi - fl;
    Rational inner = lo_frac == 0 ? simplest_between(1 / hi_frac, 0, true)
                                  : simplest_between(1 / hi_frac, 1 / lo_frac, false);
    Rational out = Rational(fl) + 1 / inner;
    out.canonicalize();
    return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string s = strip_spaces(text);
    Cursor c{s};
    if (c.done()) c.fail("empty");
    Rational r = c.rational(true);
    if (!c.done()) c.fail("unexpected trailing characters");
    return r;
}

std::string to_literal(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Integer floor(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

std::pair<Integer, Integer> split_square(const Integer& n) {
    if (n <= 0) throw ArithmeticError("split_square needs a positive integer");
    Integer rest = n;
    Integer k = 1;
    Integer d = 1;
    for (Integer p = 2; p * p <= rest; ++p) {
        int mult = 0;
        while (rest % p == 0) {
            rest /= p;
            ++mult;
        }
        for (int i = 0; i + 1 < mult; i += 2) k *= p;
        if (mult % 2 == 1) d *= p;
    }
    d *= rest;
    return {k, d};
}

int sign_sqrt(const Rational& u, const Rational& v, const Rational& w) {
    if (w < 0) throw ArithmeticError("square root of a negative rational");
    int su = sgn(u);
    int sv = (w == 0) ? 0 : sgn(v);
    if (sv == 0) return su;
    if (su == 0 || su == sv) return sv;
    Rational diff = u * u - v * v * w;
    int sd = sgn(diff);
    if (sd > 0) return su;
    if (sd < 0) return sv;
    return 0;
}

// ---------------------------------------------------------------- QuadNum

QuadNum::QuadNum(const Rational& rat, const Rational& irr, const Integer& d)
    : rat_(rat), irr_(irr), d_(d) {
    if (d_ <= 0) throw ArithmeticError("field parameter must be positive");
    if (split_square(d_).first != 1)
        throw ArithmeticError("field parameter " + d_.get_str() + " is not square-free");
    canonicalize();
}

void QuadNum::canonicalize() {
    rat_.canonicalize();
    irr_.canonicalize();
    if (d_ == 1) {
        rat_ += irr_;
        irr_ = 0;
    }
    if (irr_ == 0) d_ = 1;
}

QuadNum QuadNum::sqrt(const Rational& r) {
    if (r < 0) throw ArithmeticError("square root of a negative rational");
    if (r == 0) return QuadNum();
    Integer prod = r.get_num() * r.get_den();
    auto [k, d] = split_square(prod);
    Rational coeff(k, r.get_den());
    coeff.canonicalize();
    if (d == 1) return QuadNum(coeff);
    return QuadNum(0, coeff, d);
}

Integer QuadNum::common_field(const QuadNum& a, const QuadNum& b) {
    if (a.d_ == 1) return b.d_;
    if (b.d_ == 1 || a.d_ == b.d_) return a.d_;
    throw ArithmeticError("incompatible quadratic fields sqrt(" + a.d_.get_str() + ") and sqrt(" +
                          b.d_.get_str() + ")");
}

int QuadNum::sign() const { return sign_sqrt(rat_, irr_, Rational(d_)); }

double QuadNum::to_double() const {
    return rat_.get_d() + irr_.get_d() * std::sqrt(d_.get_d());
}

Integer QuadNum::floor() const {
    if (is_rational()) return exactnum::floor(rat_);
    // |irr| sqrt(d) = sqrt(t) with t = irr^2 d; isqrt gives a bracket of width 1/den.
    Rational t = irr_ * irr_ * d_;
    Integer prod = t.get_num() * t.get_den();
    Integer s;
    mpz_sqrt(s.get_mpz_t(), prod.get_mpz_t());
    Rational lo(s, t.get_den());
    lo.canonicalize();
    Rational approx = sgn(irr_) > 0 ? Rational(rat_ + lo) : Rational(rat_ - lo);
    Integer m = exactnum::floor(approx);
    while (QuadNum(Rational(m)) > *this) --m;
    while (QuadNum(Rational(m + 1)) <= *this) ++m;
    return m;
}

QuadNum QuadNum::conjugate() const {
    QuadNum out = *this;
    out.irr_ = -irr_;
    return out;
}

QuadNum QuadNum::operator-() const {
    QuadNum out = *this;
    out.rat_ = -rat_;
    out.irr_ = -irr_;
    return out;
}

QuadNum& QuadNum::operator+=(const QuadNum& o) {
    d_ = common_field(*this, o);
    rat_ += o.rat_;
    irr_ += o.irr_;
    canonicalize();
    return *this;
}

QuadNum& QuadNum::operator-=(const QuadNum& o) {
    d_ = common_field(*this, o);
    rat_ -= o.rat_;
    irr_ -= o.irr_;
    canonicalize();
    return *this;
}

QuadNum& QuadNum::operator*=(const QuadNum& o) {
    Integer d = common_field(*this, o);
    Rational r = rat_ * o.rat_ + irr_ * o.irr_ * d;
    Rational i = rat_ * o.irr_ + irr_ * o.rat_;
    rat_ = r;
    irr_ = i;
    d_ = d;
    canonicalize();
    return *this;
}

QuadNum& QuadNum::operator/=(const QuadNum& o) {
    if (o.rat_ == 0 && o.irr_ == 0) throw ArithmeticError("division by zero");
    Integer d = common_field(*this, o);
    // x / y = x * conj(y) / (c^2 - e^2 d); the norm is nonzero because d is
    // not a perfect square.
    Rational norm = o.rat_ * o.rat_ - o.irr_ * o.irr_ * d;
    QuadNum num = *this * o.conjugate();
    rat_ = num.rat_ / norm;
    irr_ = num.irr_ / norm;
    d_ = d;
    canonicalize();
    return *this;
}

std::strong_ordering operator<=>(const QuadNum& a, const QuadNum& b) {
    int s = (a - b).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

QuadNum parse_quad(std::string_view text) {
    std::string s = strip_spaces(text);
    Cursor c{s};
    if (c.done()) c.fail("empty");
    auto parse_radical = [&c]() -> QuadNum {
        if (!c.accept("sqrt(")) c.fail("expected sqrt(");
        Integer d = c.digits();
        if (!c.accept(")")) c.fail("expected )");
        if (d == 0) return QuadNum();
        return QuadNum::sqrt(Rational(d));
    };
    QuadNum value;
    if (c.text.substr(c.pos, 5) == "sqrt(") {
        value = parse_radical();
    } else {
        Rational lead = c.rational(true);
        if (c.accept("*")) {
            value = QuadNum(lead) * parse_radical();
        } else {
            value = QuadNum(lead);
            if (!c.done()) {
                int sgn_term = 1;
                if (c.accept("-")) sgn_term = -1;
                else if (!c.accept("+")) c.fail("expected + or -");
                QuadNum term;
                if (c.text.substr(c.pos, 5) == "sqrt(") {
                    term = parse_radical();
                } else {
                    Rational coeff = c.rational(false);
                    if (!c.accept("*")) c.fail("expected *sqrt(D)");
                    term = QuadNum(coeff) * parse_radical();
                }
                value += sgn_term > 0 ? term : -term;
            }
        }
    }
    if (!c.done()) c.fail("unexpected trailing characters");
    return value;
}

std::string to_literal(const QuadNum& x) {
    std::string out = to_literal(x.rat());
    if (x.is_rational()) return out;
    Rational mag = abs(x.irr());
    out += sgn(x.irr()) < 0 ? "-" : "+";
    out += to_literal(mag) + "*sqrt(" + x.field().get_str() + ")";
    return out;
}

std::string to_pretty(const QuadNum& x) {
    auto plain = [](const Rational& r) {
        return r.get_den() == 1 ? r.get_num().get_str() : r.get_str();
    };
    if (x.is_rational()) return plain(x.rat());
    std::string rad = "sqrt(" + x.field().get_str() + ")";
    Rational mag = abs(x.irr());
    std::string term = mag == 1 ? rad : plain(mag) + "*" + rad;
    if (x.rat() == 0) return (sgn(x.irr()) < 0 ? "-" : "") + term;
    return plain(x.rat()) + (sgn(x.irr()) < 0 ? "-" : "+") + term;
}

bool is_rational(const QuadNum& x) { return x.is_rational(); }

bool ratio_is_rational(const QuadNum& num, const QuadNum& den) {
    if (den.sign() == 0) throw ArithmeticError("ratio with zero denominator");
    if (num.is_rational() && den.is_rational()) return true;
    if (!num.is_rational() && !den.is_rational() && num.field() != den.field())
        throw ArithmeticError("ratio of elements from different quadratic fields");
    // (a + b sqrt d) / (c + e sqrt d): sqrt(d) coefficient is (bc - ae) / (c^2 - e^2 d).
    return num.irr() * den.rat() - num.rat() * den.irr() == 0;
}

// ---------------------------------------------------------------- SqrtExpr

double SqrtExpr::to_double() const {
    return (p.get_d() + q.get_d() * std::sqrt(s.get_d())) / r.get_d();
}

std::pair<Rational, Rational> SqrtExpr::enclose(int bits) const {
    if (r == 0) throw ArithmeticError("SqrtExpr with zero denominator");
    Rational base = p / r;
    Rational coeff = q / r;
    if (coeff == 0 || s == 0) return {base, base};
    Integer scale = 1;
    scale <<= static_cast<unsigned long>(bits);
    // sqrt(n/m) = sqrt(n m) / m; scale by 2^bits before taking isqrt.
    Integer prod = s.get_num() * s.get_den() * scale * scale;
    Integer root;
    mpz_sqrt(root.get_mpz_t(), prod.get_mpz_t());
    Rational lo(root, s.get_den() * scale);
    Rational hi(root + 1, s.get_den() * scale);
    lo.canonicalize();
    hi.canonicalize();
    if (coeff > 0) return {base + coeff * lo, base + coeff * hi};
    return {base + coeff * hi, base + coeff * lo};
}

QuadNum SqrtExpr::to_quad() const {
    if (r == 0) throw ArithmeticError("SqrtExpr with zero denominator");
    QuadNum v(p / r);
    if (q != 0) v += QuadNum(q / r) * QuadNum::sqrt(s);
    return v;
}

std::strong_ordering cmp_quadratic(const SqrtExpr& a, const SqrtExpr& b) {
    if (a.r == 0 || b.r == 0) throw ArithmeticError("SqrtExpr with zero denominator");
    if (a.s < 0 || b.s < 0) throw ArithmeticError("SqrtExpr with negative radicand");
    // sign(A + B sqrt(s1) + C sqrt(s2))
    Rational A = a.p / a.r - b.p / b.r;
    Rational B = a.q / a.r;
    Rational C = -b.q / b.r;
    int sb = a.s == 0 ? 0 : sgn(B);
    int sc = b.s == 0 ? 0 : sgn(C);
    int st;  // sign of T = B sqrt(s1) + C sqrt(s2)
    if (sb == 0) st = sc;
    else if (sc == 0 || sb == sc) st = sb;
    else {
        int sd = sgn(B * B * a.s - C * C * b.s);
        st = sd > 0 ? sb : (sd < 0 ? sc : 0);
    }
    int sa = sgn(A);
    int total;
    if (st == 0) total = sa;
    else if (sa == 0 || sa == st) total = st;
    else {
        // compare A^2 with T^2 = B^2 s1 + C^2 s2 + 2 B C sqrt(s1 s2)
        int sd = sign_sqrt(A * A - B * B * a.s - C * C * b.s, -2 * B * C, a.s * b.s);
        total = sd > 0 ? sa : (sd < 0 ? st : 0);
    }
    if (total < 0) return std::strong_ordering::less;
    if (total > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational rational_between(const SqrtExpr& a, const SqrtExpr& b) {
    if (cmp_quadratic(a, b) != std::strong_ordering::less)
        throw ArithmeticError("rational_between needs a < b");
    for (int bits = 8;; bits *= 2) {
        auto [alo, ahi] = a.enclose(bits);
        auto [blo, bhi] = b.enclose(bits);
        if (ahi < blo) {
            Rational lo = ahi;
            Rational hi = blo;
            // The enclosures are closed, so widen to the exact ends when they
            // are rational to get a simpler result.
            Rational out = simplest_between(lo, hi, false);
            return out;
        }
    }
}

}  // namespace exactnum
}  // namespace geodom
