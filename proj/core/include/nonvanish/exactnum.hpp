#pragma once

// Exact arithmetic kernel: arbitrary-precision rationals, quadratic surds
// base + sqrt(radicand), and depressed cubics X^3 + pX + q. Every decision
// (ordering, floor, sign) is made by exact integer arithmetic.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace nonvanish {

using Integer = mpz_class;

static_assert(sizeof(long) == sizeof(std::int64_t), "LP64 platform expected");

inline Integer to_integer(std::int64_t v) { return Integer(static_cast<long>(v)); }

/// Narrow an Integer to int64; throws PRECONDITION_VIOLATED when it does not fit.
std::int64_t to_int64(const Integer& v);

/// Canonical rational p/q with q > 0 and gcd(|p|, q) = 1.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : value_(static_cast<long>(value)) {}  // NOLINT
  Rational(int value) : value_(static_cast<long>(value)) {}           // NOLINT
  explicit Rational(const Integer& value) : value_(value) {}
  Rational(const Integer& num, const Integer& den);

  /// Accepts "p" or "p/q" with optional leading '-'. Throws PARSE_ERROR.
  static Rational parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Integer floor() const;
  Integer ceil() const;
  Rational abs() const;

  /// "p/q", or "p" when q = 1.
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws PRECONDITION_VIOLATED on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Exact square root when r is the square of a rational, otherwise nullopt.
std::optional<Rational> exact_sqrt(const Rational& r);

/// base + sqrt(radicand), radicand >= 0.
class Surd {
 public:
  /// Throws PRECONDITION_VIOLATED when radicand < 0.
  Surd(Rational base, Rational radicand);

  const Rational& base() const { return base_; }
  const Rational& radicand() const { return radicand_; }

  /// True iff radicand is a rational square and the sum is an integer.
  bool is_integer() const;

  /// "base + sqrt(radicand)" with rationals in p/q form.
  std::string str() const;

  friend bool operator==(const Surd&, const Surd&) = default;

 private:
  Rational base_;
  Rational radicand_;
};

/// Exact order of x relative to s.base + sqrt(s.radicand).
std::strong_ordering surd_cmp(const Rational& x, const Surd& s);

/// floor(s.base + sqrt(s.radicand)).
Integer floor_surd(const Surd& s);

/// Monic depressed cubic X^3 + p X + q.
struct Cubic {
  Rational p;
  Rational q;

  Rational operator()(const Rational& x) const;
};

/// Sign of f(x) in {-1, 0, 1}.
int cubic_sign(const Cubic& f, const Rational& x);

struct RootBracket {
  Rational lo;
  Rational hi;
};

/// Bisection bracket lo < hi, hi - lo <= width, sign f(lo) <= 0 <= sign f(hi),
/// for a strictly increasing cubic (p >= 0). The starting bracket is
/// [-1 - |p| - |q|, 1 + |p| + |q|], so brackets for smaller widths nest inside
/// brackets for larger ones. Throws PRECONDITION_VIOLATED when p < 0 or width <= 0.
RootBracket cubic_unique_root_bracket(const Cubic& f, const Rational& width);

}  // namespace nonvanish
