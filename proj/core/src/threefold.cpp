#include "nonvanish/threefold.hpp"

#include <algorithm>
#include <sstream>

#include "nonvanish/error.hpp"

namespace nonvanish {

namespace {

std::string triple(std::int64_t d, std::int64_t e, std::int64_t t) {
  std::ostringstream os;
  os << "(" << d << ", " << e << ", " << t << ")";
  return os.str();
}

}  // namespace

std::string_view to_string(PicardMode m) noexcept {
  return m == PicardMode::PicZ ? "pic_z" : "num_z";
}

std::string_view to_string(VanishingMode m) noexcept {
  return m == VanishingMode::FullC2 ? "c2" : "c4";
}

Rational Threefold::lambda() const {
  const Integer e = to_integer(epsilon);
  return Rational(to_integer(tau), 2 * to_integer(d)) - Rational(Integer(e * e), 4);
}

bool ValidationReport::has(std::string_view rule) const {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.rule == rule; });
}

ValidationReport validate(std::int64_t d, std::int64_t epsilon, std::int64_t tau) {
  ValidationReport report;
  auto fail = [&](std::string rule, std::string message) {
    report.violations.push_back({std::move(rule), std::move(message)});
  };

  if (d < 1) {
    fail("degree", "degree d = " + std::to_string(d) + " must be >= 1");
    report.ok = false;
    return report;
  }

  const Integer e = to_integer(epsilon);
  const Integer t = to_integer(tau);
  const Integer et = e * t;
  const Threefold x{d, epsilon, tau};
  const Rational lambda = x.lambda();

  if (epsilon < -4) fail("P3.2-1", "epsilon = " + std::to_string(epsilon) + " < -4");
  if (epsilon == -4 && !(d == 1 && tau == 6)) {
    fail("P3.2-2", "epsilon = -4 forces (d, epsilon, tau) = (1, -4, 6), got " + triple(d, epsilon, tau));
  }
  if (epsilon == -3 && !(d == 2 && tau == 8)) {
    fail("P3.2-3", "epsilon = -3 forces (d, epsilon, tau) = (2, -3, 8), got " + triple(d, epsilon, tau));
  }
  if (mpz_divisible_ui_p(et.get_mpz_t(), 24) == 0) {
    fail("P3.2-4", "epsilon*tau = " + et.get_str() + " is not a multiple of 24");
  } else if (epsilon < 0 && et != -24) {
    fail("P3.2-4", "epsilon < 0 forces epsilon*tau = -24, got " + et.get_str());
  }
  if (epsilon != 0 && tau <= 0) fail("P3.2-5", "epsilon != 0 requires tau > 0, got tau = " + std::to_string(tau));
  if (epsilon == 0 && t <= -2 * to_integer(d)) {
    fail("P3.2-6", "epsilon = 0 requires tau > -2d = " + std::to_string(-2 * d) + ", got " + std::to_string(tau));
  }
  if (mpz_even_p(t.get_mpz_t()) == 0) fail("P3.2-7", "tau = " + std::to_string(tau) + " is odd");
  const bool eps_even = mpz_even_p(e.get_mpz_t()) != 0;
  if (eps_even && lambda < Rational(-1)) {
    fail("P3.2-8", "epsilon even requires tau/2d - epsilon^2/4 >= -1, got " + lambda.str());
  }
  if (!eps_even && lambda < Rational(Integer(-1), Integer(4))) {
    fail("P3.2-9", "epsilon odd requires tau/2d - epsilon^2/4 >= -1/4, got " + lambda.str());
  }
  if (epsilon < 0) {
    const bool listed = (epsilon == -4 && tau == 6) || (epsilon == -3 && tau == 8) ||
                        (epsilon == -2 && tau == 12) || (epsilon == -1 && tau == 24);
    if (!listed) {
      fail("P3.2-10", "epsilon < 0 allows only (epsilon, tau) in {(-4,6), (-3,8), (-2,12), (-1,24)}");
    }
  }
  // A cubic is integer-valued iff it is integral at four consecutive integers.
  for (std::int64_t n = 0; n < 4; ++n) {
    const Rational v = hilbert_O(x, n);
    if (!v.is_integer()) {
      fail("parity", "chi(O_X(" + std::to_string(n) + ")) = " + v.str() + " is not an integer");
      break;
    }
  }

  report.ok = report.violations.empty();
  return report;
}

ValidationReport validate(const Threefold& x) { return validate(x.d, x.epsilon, x.tau); }

Threefold hypersurface(std::int64_t d) {
  if (d < 1 || d > 1'000'000) {
    throw Error(ErrorCode::PreconditionViolated, "hypersurface degree must lie in [1, 10^6], got " + std::to_string(d));
  }
  return Threefold{d, d - 5, d * (10 - 5 * d + d * d), PicardMode::PicZ, VanishingMode::FullC2};
}

Rational hilbert_O(const Threefold& x, std::int64_t n) {
  if (x.d == 0) throw Error(ErrorCode::PreconditionViolated, "degree d = 0");
  const Rational shift = Rational(n) - Rational(to_integer(x.epsilon), 2);
  return Rational(to_integer(x.d), 6) * shift * (shift * shift + x.lambda());
}

Integer chi_O(const Threefold& x, std::int64_t n) {
  const Rational v = hilbert_O(x, n);
  if (!v.is_integer()) {
    throw Error(ErrorCode::InternalNonInteger, "chi(O_X(" + std::to_string(n) + ")) = " + v.str() + " on " +
                                                   triple(x.d, x.epsilon, x.tau));
  }
  return v.numerator();
}

}  // namespace nonvanish
