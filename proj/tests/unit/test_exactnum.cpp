#include <gtest/gtest.h>

#include <compare>
#include <functional>
#include <random>

#include "nonvanish/error.hpp"
#include "nonvanish/exactnum.hpp"
#include "oracles.hpp"

using namespace nonvanish;

namespace {

Rational q(long p, long d = 1) { return Rational(Integer(p), Integer(d)); }

int as_int(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::IoError;
}

}  // namespace

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(q(6, -4).str(), "-3/2");
  EXPECT_EQ(q(10, 5).str(), "2");
  EXPECT_EQ(q(0, 7).str(), "0");
  EXPECT_TRUE(q(-8, 4).is_integer());
  EXPECT_EQ(q(-3, 2).denominator(), 2);
}

TEST(Rational, FloorAndCeil) {
  EXPECT_EQ(q(-3, 2).floor(), -2);
  EXPECT_EQ(q(-3, 2).ceil(), -1);
  EXPECT_EQ(q(7, 3).floor(), 2);
  EXPECT_EQ(q(5).floor(), 5);
  EXPECT_EQ(q(5).ceil(), 5);
}

TEST(Rational, ParseRoundTrip) {
  for (const char* s : {"0", "-3/2", "25/4", "123456789012345678901234567891/7", "-1"}) {
    EXPECT_EQ(Rational::parse(s).str(), s);
  }
  EXPECT_EQ(Rational::parse("4/6").str(), "2/3");
  EXPECT_EQ(Rational::parse("+5").str(), "5");
}

TEST(Rational, ParseRejects) {
  for (const char* s : {"", "1/0", "a", "1/-2", "1.5", "--1", "3/"}) {
    EXPECT_EQ(code_of([&] { Rational::parse(s); }), ErrorCode::ParseError) << s;
  }
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(q(1, 2) + q(1, 3), q(5, 6));
  EXPECT_EQ(q(1, 2) - q(1, 3), q(1, 6));
  EXPECT_EQ(q(-2, 3) * q(9, 4), q(-3, 2));
  EXPECT_EQ(q(1, 2) / q(-1, 4), q(-2));
  EXPECT_LT(q(-3, 2), q(-1));
  EXPECT_EQ(code_of([] { (void)(q(1) / q(0)); }), ErrorCode::PreconditionViolated);
  EXPECT_EQ(code_of([] { Rational(Integer(1), Integer(0)); }), ErrorCode::PreconditionViolated);
}

TEST(Integer, NarrowingThrowsOnOverflow) {
  EXPECT_EQ(to_int64(Integer(-42)), -42);
  Integer big = Integer(1) << 70;
  EXPECT_EQ(code_of([&] { to_int64(big); }), ErrorCode::PreconditionViolated);
}

TEST(ExactSqrt, PerfectSquaresOnly) {
  EXPECT_EQ(exact_sqrt(q(25, 4)), q(5, 2));
  EXPECT_EQ(exact_sqrt(q(0)), q(0));
  EXPECT_FALSE(exact_sqrt(q(5, 2)).has_value());
  EXPECT_FALSE(exact_sqrt(q(9, 2)).has_value());
  EXPECT_FALSE(exact_sqrt(q(-4)).has_value());
}

TEST(Surd, QuadricExampleIsIntegral) {
  const Surd zeta(q(-3, 2), q(25, 4));
  EXPECT_TRUE(zeta.is_integer());
  EXPECT_EQ(surd_cmp(q(1), zeta), std::strong_ordering::equal);
  EXPECT_EQ(floor_surd(zeta), 1);
  EXPECT_EQ(zeta.str(), "-3/2 + sqrt(25/4)");
}

TEST(Surd, IrrationalFloor) {
  const Surd zeta(q(-1), q(5, 2));  // -1 + 1.58...
  EXPECT_FALSE(zeta.is_integer());
  EXPECT_EQ(floor_surd(zeta), 0);
  EXPECT_EQ(surd_cmp(q(0), zeta), std::strong_ordering::less);
  EXPECT_EQ(surd_cmp(q(-1), zeta), std::strong_ordering::less);
  EXPECT_EQ(surd_cmp(q(1), zeta), std::strong_ordering::greater);
}

TEST(Surd, ZeroRadicandAndNegativeRejected) {
  const Surd s(q(-3, 2), q(0));
  EXPECT_EQ(floor_surd(s), -2);
  EXPECT_EQ(surd_cmp(q(-3, 2), s), std::strong_ordering::equal);
  EXPECT_FALSE(s.is_integer());
  EXPECT_EQ(code_of([] { Surd(q(0), q(-1, 3)); }), ErrorCode::PreconditionViolated);
}

TEST(Surd, DegenerateRadicand) {
  EXPECT_EQ(surd_cmp(q(0), Surd(q(0), q(0))), std::strong_ordering::equal);
  EXPECT_EQ(floor_surd(Surd(q(7, 2), q(0))), 3);
  EXPECT_EQ(floor_surd(Surd(q(-7, 2), q(0))), -4);
}

TEST(Surd, HugeRadicand) {
  const Integer k = Integer(1) << 90;
  const Surd s(q(0), Rational(Integer(k * k + 1)));
  EXPECT_EQ(floor_surd(s), k);
  EXPECT_EQ(surd_cmp(Rational(k), s), std::strong_ordering::less);
}

// Property: exact comparison and floor agree with a 400-bit evaluation,
// including exact-tie cases built from perfect squares.
TEST(SurdProperty, AgreesWithHighPrecisionOracle) {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<long> num(-400, 400), den(1, 12), sq(0, 60);
  for (int i = 0; i < 3000; ++i) {
    const Rational base = q(num(rng), den(rng));
    Rational radicand = q(std::abs(num(rng)), den(rng));
    if (i % 3 == 0) {
      const Rational r = q(sq(rng), den(rng));
      radicand = r * r;
    }
    const Surd s(base, radicand);
    const mpq_class b(base.numerator(), base.denominator()), r(radicand.numerator(), radicand.denominator());
    EXPECT_EQ(floor_surd(s), oracle::floor_surd(b, r)) << s.str();
    const Rational x = i % 5 == 0 ? Rational(floor_surd(s)) : q(num(rng), den(rng));
    const mpq_class xq(x.numerator(), x.denominator());
    EXPECT_EQ(as_int(surd_cmp(x, s)), oracle::surd_cmp(xq, b, r)) << x.str() << " vs " << s.str();
  }
}

TEST(Cubic, SignAndEvaluation) {
  const Cubic f{q(0), q(-24)};
  EXPECT_EQ(f(q(3)), q(3));
  EXPECT_EQ(cubic_sign(f, q(2)), -1);
  EXPECT_EQ(cubic_sign(f, q(3)), 1);
  EXPECT_EQ(cubic_sign(Cubic{q(1), q(0)}, q(0)), 0);
}

TEST(Cubic, BracketStraddlesRoot) {
  const Cubic f{q(0), q(-24)};  // root 24^(1/3) = 2.884...
  const RootBracket b = cubic_unique_root_bracket(f, q(1, 1024));
  EXPECT_LE(b.hi - b.lo, q(1, 1024));
  EXPECT_LE(cubic_sign(f, b.lo), 0);
  EXPECT_GE(cubic_sign(f, b.hi), 0);
  EXPECT_LT(q(2), b.lo);
  EXPECT_LT(b.hi, q(3));
}

TEST(Cubic, BracketAroundRationalRoot) {
  const Cubic f{q(1), q(0)};  // X^3 + X, root 0
  const RootBracket b = cubic_unique_root_bracket(f, q(1));
  EXPECT_LE(b.lo, q(0));
  EXPECT_GE(b.hi, q(0));
  EXPECT_LE(b.hi - b.lo, q(1));
  const Cubic g{q(12), q(-24)};  // root in (1, 2)
  const RootBracket c = cubic_unique_root_bracket(g, q(1, 64));
  EXPECT_LT(q(1), c.lo);
  EXPECT_LT(c.hi, q(2));
}

TEST(Cubic, BracketRejectsNonMonotoneAndBadWidth) {
  EXPECT_EQ(code_of([] { cubic_unique_root_bracket(Cubic{q(-1), q(0)}, q(1)); }), ErrorCode::PreconditionViolated);
  EXPECT_EQ(code_of([] { cubic_unique_root_bracket(Cubic{q(1), q(0)}, q(0)); }), ErrorCode::PreconditionViolated);
}

TEST(CubicProperty, BracketsNestUnderRefinement) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> p(0, 500), qq(-5000, 5000), den(1, 9);
  for (int i = 0; i < 300; ++i) {
    const Cubic f{q(p(rng), den(rng)), q(qq(rng), den(rng))};
    RootBracket prev = cubic_unique_root_bracket(f, q(4));
    for (long w = 2; w <= 1 << 14; w *= 4) {
      const RootBracket b = cubic_unique_root_bracket(f, q(1, w));
      EXPECT_LE(cubic_sign(f, b.lo), 0);
      EXPECT_GE(cubic_sign(f, b.hi), 0);
      EXPECT_LE(prev.lo, b.lo);
      EXPECT_LE(b.hi, prev.hi);
      prev = b;
    }
  }
}
