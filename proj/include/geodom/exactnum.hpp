#pragma once

// Exact arithmetic over the rationals and over quadratic fields Q(sqrt(d)).

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace geodom {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown on division by zero and on mixing elements of different fields.
class ArithmeticError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Parse failure with 1-based position information (line is 0 when unknown).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line = 0, int column = 0);
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

namespace exactnum {

int sign(const Rational& r);
Rational make_rational(long num, long den = 1);
Rational parse_rational(std::string_view text);
/// Always prints "p/q", including "n/1" for integers.
std::string to_literal(const Rational& r);
Integer floor(const Rational& r);
bool is_integer(const Rational& r);

/// Largest square-free divisor reduction: n = k^2 * d with d square-free.
/// Returns {k, d}. Requires n > 0.
std::pair<Integer, Integer> split_square(const Integer& n);

/// Sign of u + v*sqrt(w) for rational w >= 0, without floating point.
int sign_sqrt(const Rational& u, const Rational& v, const Rational& w);

/// Element rat + irr*sqrt(d) of Q(sqrt(d)), d square-free. d == 1 encodes a
/// plain rational, in which case irr is 0.
class QuadNum {
public:
    QuadNum() = default;
    QuadNum(const Rational& r) : rat_(r) {}  // NOLINT(google-explicit-constructor)
    QuadNum(long v) : rat_(v) {}              // NOLINT(google-explicit-constructor)
    /// Throws ArithmeticError unless d is a positive square-free integer.
    QuadNum(const Rational& rat, const Rational& irr, const Integer& d);

    /// sqrt(r) for a non-negative rational r when it lies in some Q(sqrt(d)),
    /// i.e. r = (a/b)^2 * d. Works for any rational r >= 0.
    static QuadNum sqrt(const Rational& r);

    const Rational& rat() const noexcept { return rat_; }
    const Rational& irr() const noexcept { return irr_; }
    const Integer& field() const noexcept { return d_; }
    bool is_rational() const noexcept { return irr_ == 0; }

    int sign() const;
    double to_double() const;
    Integer floor() const;
    QuadNum conjugate() const;

    QuadNum operator-() const;
    QuadNum& operator+=(const QuadNum& o);
    QuadNum& operator-=(const QuadNum& o);
    QuadNum& operator*=(const QuadNum& o);
    QuadNum& operator/=(const QuadNum& o);

    friend QuadNum operator+(QuadNum a, const QuadNum& b) { return a += b; }
    friend QuadNum operator-(QuadNum a, const QuadNum& b) { return a -= b; }
    friend QuadNum operator*(QuadNum a, const QuadNum& b) { return a *= b; }
    friend QuadNum operator/(QuadNum a, const QuadNum& b) { return a /= b; }

    friend bool operator==(const QuadNum& a, const QuadNum& b) {
        return a.d_ == b.d_ && a.rat_ == b.rat_ && a.irr_ == b.irr_;
    }
    /// Throws ArithmeticError for incompatible fields.
    friend std::strong_ordering operator<=>(const QuadNum& a, const QuadNum& b);

private:
    void canonicalize();
    static Integer common_field(const QuadNum& a, const QuadNum& b);

    Rational rat_{0};
    Rational irr_{0};
    Integer d_{1};
};

/// Literal grammar: "P/Q" or "P/Q+R/S*sqrt(D)" (also "-R/S*sqrt(D)"); bare
/// integers are accepted for P/Q and R/S. D need not be square-free on input.
QuadNum parse_quad(std::string_view text);
/// Canonical literal that parse_quad reads back to the same value.
std::string to_literal(const QuadNum& x);
/// Human-oriented form: drops zero parts and unit denominators ("sqrt(2)").
std::string to_pretty(const QuadNum& x);

/// Rational iff (a + b sqrt d) / (c + e sqrt d) has zero sqrt(d) coefficient,
/// i.e. b*c - a*e == 0. Throws on a zero denominator.
bool is_rational(const QuadNum& x);
bool ratio_is_rational(const QuadNum& num, const QuadNum& den);

/// (p + q*sqrt(s)) / r with rational p, q, r and rational s > 0. Different
/// expressions may live in different quadratic fields.
struct SqrtExpr {
    Rational p{0};
    Rational q{0};
    Rational r{1};
    Rational s{1};

    static SqrtExpr from_rational(const Rational& v) { return {v, 0, 1, 1}; }
    double to_double() const;
    /// Rational bounds lo <= value <= hi with hi - lo <= 2^-bits (scaled by |q/r|).
    std::pair<Rational, Rational> enclose(int bits) const;
    /// Same value as an element of Q(sqrt(d)) with d the square-free part of s.
    QuadNum to_quad() const;
};

std::strong_ordering cmp_quadratic(const SqrtExpr& a, const SqrtExpr& b);
/// A rational strictly between a < b. Throws if a >= b.
Rational rational_between(const SqrtExpr& a, const SqrtExpr& b);

}  // namespace exactnum

using exactnum::QuadNum;
using exactnum::SqrtExpr;

}  // namespace geodom
