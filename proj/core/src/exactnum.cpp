#include "nonvanish/exactnum.hpp"

#include <cctype>
#include <ostream>

#include "nonvanish/error.hpp"

namespace nonvanish {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(whole) + "'");
  }
  Integer v(std::string(s), 10);
  return negative ? Integer(-v) : v;
}

// Exact integer square root of a non-negative integer, or nullopt.
std::optional<Integer> exact_isqrt(const Integer& v) {
  if (sgn(v) < 0) return std::nullopt;
  if (mpz_perfect_square_p(v.get_mpz_t()) == 0) return std::nullopt;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), v.get_mpz_t());
  return root;
}

}  // namespace

std::int64_t to_int64(const Integer& v) {
  if (!v.fits_slong_p()) {
    throw Error(ErrorCode::PreconditionViolated, "integer " + v.get_str() + " exceeds 64-bit range");
  }
  return static_cast<std::int64_t>(v.get_si());
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::PreconditionViolated, "zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  Integer num = parse_integer(text.substr(0, slash), text);
  std::string_view den_text = text.substr(slash + 1);
  if (!all_digits(den_text)) {
    throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'");
  }
  Integer den(std::string(den_text), 10);
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

Integer Rational::floor() const {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return out;
}

Integer Rational::ceil() const {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return out;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const {
  Rational out;
  out.value_ = -value_;
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::PreconditionViolated, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::optional<Rational> exact_sqrt(const Rational& r) {
  auto num = exact_isqrt(r.numerator());
  if (!num) return std::nullopt;
  auto den = exact_isqrt(r.denominator());
  if (!den) return std::nullopt;
  return Rational(*num, *den);
}

Surd::Surd(Rational base, Rational radicand) : base_(std::move(base)), radicand_(std::move(radicand)) {
  if (radicand_.sign() < 0) {
    throw Error(ErrorCode::PreconditionViolated, "negative radicand " + radicand_.str());
  }
}

bool Surd::is_integer() const {
  auto root = exact_sqrt(radicand_);
  return root && (base_ + *root).is_integer();
}

std::string Surd::str() const { return base_.str() + " + sqrt(" + radicand_.str() + ")"; }

std::strong_ordering surd_cmp(const Rational& x, const Surd& s) {
  const Rational t = x - s.base();
  if (t.sign() < 0) {
    // sqrt(r) >= 0 > t, equality impossible
    return std::strong_ordering::less;
  }
  return (t * t) <=> s.radicand();
}

Integer floor_surd(const Surd& s) {
  Integer root;
  const Integer floor_r = s.radicand().floor();
  mpz_sqrt(root.get_mpz_t(), floor_r.get_mpz_t());
  // floor(base) + isqrt(floor(r)) <= value < that + 2
  Integer k = s.base().floor() + root;
  while (surd_cmp(Rational(k), s) == std::strong_ordering::greater) --k;
  while (surd_cmp(Rational(Integer(k + 1)), s) != std::strong_ordering::greater) ++k;
  return k;
}

Rational Cubic::operator()(const Rational& x) const { return x * x * x + p * x + q; }

int cubic_sign(const Cubic& f, const Rational& x) { return f(x).sign(); }

RootBracket cubic_unique_root_bracket(const Cubic& f, const Rational& width) {
  if (f.p.sign() < 0) {
    throw Error(ErrorCode::PreconditionViolated,
                "cubic with p = " + f.p.str() + " < 0 is not monotone; real root may not be unique");
  }
  if (width.sign() <= 0) throw Error(ErrorCode::PreconditionViolated, "bracket width must be positive");

  const Rational bound = Rational(1) + f.p.abs() + f.q.abs();
  RootBracket b{-bound, bound};
  const Rational half(Integer(1), Integer(2));
  while (b.hi - b.lo > width) {
    const Rational mid = (b.lo + b.hi) * half;
    if (cubic_sign(f, mid) <= 0) {
      b.lo = mid;
    } else {
      b.hi = mid;
    }
  }
  return b;
}

}  // namespace nonvanish
