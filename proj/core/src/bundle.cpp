#include "nonvanish/bundle.hpp"

#include <string>

#include "nonvanish/error.hpp"

namespace nonvanish {

void require_normalized(const BundleInvariants& b) {
  if (!b.normalized()) {
    throw Error(ErrorCode::PreconditionViolated, "bundle is not normalized: c1 = " + std::to_string(b.c1) +
                                                     " (expected 0 or -1)");
  }
}

DerivedInvariants derive(const Threefold& x, const BundleInvariants& b) {
  require_normalized(b);
  if (x.d < 1) throw Error(ErrorCode::PreconditionViolated, "degree d must be >= 1");

  const Integer d = to_integer(x.d);
  const Integer e = to_integer(x.epsilon);
  const Integer c1 = to_integer(b.c1);
  const Integer c2 = to_integer(b.c2);
  const Integer a = to_integer(b.alpha);

  DerivedInvariants di;
  di.delta = c2 + d * a * a + c1 * d * a;
  di.lambda = x.lambda();
  di.theta = Rational(Integer(3 * c2), d) - di.lambda - Rational(Integer(3 * c1 * c1), 4);
  di.zeta0 = Rational(Integer(e - c1), 2);
  di.w0 = di.zeta0.floor() + 1;
  if (di.theta.sign() >= 0) {
    di.zeta = Surd(di.zeta0, di.theta);
    di.alpha_bar = floor_surd(*di.zeta) + 1;
  }
  return di;
}

Rational hilbert_E(const Threefold& x, const DerivedInvariants& di, std::int64_t n) {
  const Rational shift = Rational(n) - di.zeta0;
  return Rational(to_integer(x.d), 3) * shift * (shift * shift - di.theta);
}

Integer chi_E(const Threefold& x, const DerivedInvariants& di, std::int64_t n) {
  const Rational v = hilbert_E(x, di, n);
  if (!v.is_integer()) {
    throw Error(ErrorCode::InternalNonInteger,
                "chi(E(" + std::to_string(n) + ")) = " + v.str() + " is not an integer; invariants are inconsistent");
  }
  return v.numerator();
}

bool is_split_numeric(const DerivedInvariants& di) { return di.delta == 0; }

std::string_view to_string(Regime r) noexcept {
  switch (r) {
    case Regime::NonstableStrong: return "NONSTABLE_STRONG";
    case Regime::Gap: return "GAP";
    case Regime::StableStrong: return "STABLE_STRONG";
  }
  return "UNKNOWN";
}

Regime regime(const Threefold& x, const BundleInvariants& b) {
  const Integer two_alpha = 2 * to_integer(b.alpha);
  const Integer e = to_integer(x.epsilon);
  const Integer c1 = to_integer(b.c1);
  if (two_alpha <= -(e + 3 + c1)) return Regime::NonstableStrong;
  if (two_alpha >= e + 5 - c1) return Regime::StableStrong;
  return Regime::Gap;
}

}  // namespace nonvanish
