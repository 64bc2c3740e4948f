#include <gtest/gtest.h>

#include "generators.hpp"
#include "nonvanish/error.hpp"
#include "nonvanish/threefold.hpp"
#include "oracles.hpp"

using namespace nonvanish;

TEST(Validate, ProjectiveSpaceAccepted) {
  EXPECT_TRUE(validate(1, -4, 6).ok);
  EXPECT_TRUE(validate(2, -3, 8).ok);
  EXPECT_TRUE(validate(3, -2, 12).ok);
}

TEST(Validate, EpsilonTauNotMinus24) {
  const ValidationReport r = validate(2, -3, 10);
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(r.has("P3.2-4"));
}

TEST(Validate, OddTau) {
  const ValidationReport r = validate(2, 0, -5);
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(r.has("P3.2-7"));
}

TEST(Validate, EachRuleFires) {
  EXPECT_TRUE(validate(0, 0, 0).has("degree"));
  EXPECT_EQ(validate(0, 0, 0).violations.size(), 1u);
  EXPECT_TRUE(validate(1, -5, 6).has("P3.2-1"));
  EXPECT_TRUE(validate(2, -4, 6).has("P3.2-2"));
  EXPECT_TRUE(validate(3, -3, 8).has("P3.2-3"));
  EXPECT_TRUE(validate(1, 1, 12).has("P3.2-4"));
  EXPECT_TRUE(validate(1, 2, -12).has("P3.2-5"));
  EXPECT_TRUE(validate(1, 0, -2).has("P3.2-6"));
  EXPECT_TRUE(validate(1, 0, 3).has("P3.2-7"));
  EXPECT_TRUE(validate(1, 2, 0).has("P3.2-5"));
  EXPECT_TRUE(validate(10, 4, 24).has("P3.2-8"));  // lambda = 24/20 - 4 < -1
  EXPECT_TRUE(validate(10, 3, 8).has("P3.2-9"));  // lambda = 8/20 - 9/4 < -1/4
  EXPECT_TRUE(validate(1, -2, 24).has("P3.2-10"));
  EXPECT_TRUE(validate(1, 0, 1).has("parity"));
}

TEST(Validate, OkIffNoViolations) {
  gen::Rng rng(11);
  for (int i = 0; i < 2000; ++i) {
    const ValidationReport r = validate(gen::uniform(rng, -2, 30), gen::uniform(rng, -6, 10), gen::uniform(rng, -60, 200));
    EXPECT_EQ(r.ok, r.violations.empty());
  }
}

TEST(Hypersurface, KnownDegrees) {
  EXPECT_EQ(hypersurface(1), (Threefold{1, -4, 6, PicardMode::PicZ, VanishingMode::FullC2}));
  EXPECT_EQ(hypersurface(2), (Threefold{2, -3, 8, PicardMode::PicZ, VanishingMode::FullC2}));
  EXPECT_EQ(hypersurface(5), (Threefold{5, 0, 50, PicardMode::PicZ, VanishingMode::FullC2}));
  EXPECT_THROW(hypersurface(0), Error);
}

TEST(Hypersurface, AllPassValidation) {
  for (std::int64_t d = 1; d <= 100; ++d) {
    const Threefold x = hypersurface(d);
    EXPECT_EQ(x.tau, d * (10 - 5 * d + d * d));
    EXPECT_TRUE(validate(x).ok) << d;
  }
}

TEST(ChiO, Examples) {
  EXPECT_EQ(chi_O(hypersurface(1), 1), 4);
  EXPECT_EQ(chi_O(hypersurface(2), 0), 1);
  EXPECT_EQ(chi_O(Threefold{7, 0, 20}, 0), 0);
  EXPECT_EQ(chi_O(hypersurface(1), 3), 20);  // h0(O_P3(3))
}

TEST(ChiO, NonIntegerThrows) {
  try {
    chi_O(Threefold{1, 0, 1}, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InternalNonInteger);
  }
}

TEST(ChiOProperty, MatchesRiemannRochAndDuality) {
  for (const Threefold& x : gen::valid_threefolds()) {
    EXPECT_EQ(chi_O(x, 0), Integer(-x.epsilon * x.tau / 24));
    for (std::int64_t n = -50; n <= 50; n += 7) {
      const Integer v = chi_O(x, n);
      EXPECT_EQ(Rational(v), Rational(oracle::chi_line(x.d, x.epsilon, x.tau, n).get_num(),
                                      oracle::chi_line(x.d, x.epsilon, x.tau, n).get_den()));
      EXPECT_EQ(v, -chi_O(x, x.epsilon - n));
    }
  }
}

TEST(ChiOProperty, IntegralOnWideWindow) {
  for (std::int64_t d = 1; d <= 30; ++d) {
    const Threefold x = hypersurface(d);
    for (std::int64_t n = -50; n <= 50; ++n) EXPECT_NO_THROW(chi_O(x, n));
  }
}

TEST(Lambda, Values) {
  EXPECT_EQ(hypersurface(2).lambda(), Rational(Integer(-1), Integer(4)));
  EXPECT_EQ(hypersurface(1).lambda(), Rational(-1));
  EXPECT_EQ(hypersurface(5).lambda(), Rational(5));
}
