#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "nonvanish/exactnum.hpp"
#include "nonvanish/threefold.hpp"

namespace nonvanish {

/// Numerical data of a normalized rank-2 bundle E: c1 in {0, -1}, the second
/// Chern number c2 = c2(E).H, and alpha, the least t with h0(E(t)) != 0.
/// E is stable iff alpha > 0.
struct BundleInvariants {
  std::int64_t c1 = 0;
  std::int64_t c2 = 0;
  std::int64_t alpha = 0;

  bool normalized() const { return c1 == 0 || c1 == -1; }
  bool stable() const { return alpha > 0; }

  friend bool operator==(const BundleInvariants&, const BundleInvariants&) = default;
};

/// Throws PRECONDITION_VIOLATED when c1 is not in {0, -1}.
void require_normalized(const BundleInvariants& b);

/// Quantities controlling the roots of chi(E(n)) = (d/3)(n - zeta0)[(n - zeta0)^2 - theta].
///
///   delta  = c2 + d alpha^2 + c1 d alpha
///   theta  = 3 c2/d - tau/2d + e^2/4 - 3 c1^2/4
///   zeta0  = (e - c1)/2,  w0 = floor(zeta0) + 1
///   lambda = tau/2d - e^2/4
///   zeta   = zeta0 + sqrt(theta),  alpha_bar = floor(zeta) + 1   (theta >= 0 only)
///
/// The integral part is the floor, so zeta0 = -3/2 gives w0 = -1.
struct DerivedInvariants {
  Integer delta;
  Rational theta;
  Rational zeta0;
  Integer w0;
  Rational lambda;
  std::optional<Surd> zeta;
  std::optional<Integer> alpha_bar;

  friend bool operator==(const DerivedInvariants&, const DerivedInvariants&) = default;
};

DerivedInvariants derive(const Threefold& x, const BundleInvariants& b);

/// chi(E(n)) as an exact rational.
Rational hilbert_E(const Threefold& x, const DerivedInvariants& di, std::int64_t n);

/// chi(E(n)) asserted integral; throws INTERNAL_NON_INTEGER otherwise.
Integer chi_E(const Threefold& x, const DerivedInvariants& di, std::int64_t n);

/// delta = 0, the numerical shadow of E being split.
bool is_split_numeric(const DerivedInvariants& di);

enum class Regime { NonstableStrong, Gap, StableStrong };

std::string_view to_string(Regime r) noexcept;

/// NonstableStrong iff 2 alpha <= -(e + 3 + c1); StableStrong iff
/// 2 alpha >= e + 5 - c1; Gap in between.
Regime regime(const Threefold& x, const BundleInvariants& b);

}  // namespace nonvanish
