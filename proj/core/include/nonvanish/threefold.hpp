#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nonvanish/exactnum.hpp"

namespace nonvanish {

/// PicZ: Pic(X) = Z generated by H. NumZ: only Num(X) = Z; twist degrees are
/// then read as degrees of numerical classes of line bundles.
enum class PicardMode { PicZ, NumZ };

/// FullC2: h1(O_X(n)) = 0 for every n. KodairaC4: only the Kodaira-type
/// vanishing away from degrees 0..epsilon is assumed.
enum class VanishingMode { FullC2, KodairaC4 };

std::string_view to_string(PicardMode m) noexcept;
std::string_view to_string(VanishingMode m) noexcept;

/// Polarized smooth threefold given by its characteristic numbers:
/// degree d = H^3, canonical twist epsilon (omega_X = O_X(epsilon)) and
/// tau = c2(X).H.
struct Threefold {
  std::int64_t d = 1;
  std::int64_t epsilon = 0;
  std::int64_t tau = 0;
  PicardMode picard_mode = PicardMode::PicZ;
  VanishingMode vanishing_mode = VanishingMode::KodairaC4;

  /// tau/2d - epsilon^2/4. Requires d != 0.
  Rational lambda() const;

  friend bool operator==(const Threefold&, const Threefold&) = default;
};

struct Violation {
  std::string rule;  // "degree", "P3.2-1" ... "P3.2-10", "parity"
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;

  bool has(std::string_view rule) const;

  friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

/// Necessary conditions on (d, epsilon, tau) for a smooth polarized threefold
/// with Pic = Z and h0(O_X(1)) != 0. Failures are reported, never thrown.
///
/// Rules run in order: d >= 1 ("degree"; nothing else is checked when it
/// fails), the ten classical restrictions "P3.2-1".."P3.2-10", and "parity":
/// chi(O_X(n)) must be integer-valued.
ValidationReport validate(std::int64_t d, std::int64_t epsilon, std::int64_t tau);
ValidationReport validate(const Threefold& x);

/// Smooth hypersurface of degree d in P^4: (d, d-5, d(10-5d+d^2)) with full
/// vanishing. Throws PRECONDITION_VIOLATED unless 1 <= d <= 10^6.
Threefold hypersurface(std::int64_t d);

/// chi(O_X(n)) = (d/6)(n - e/2)[(n - e/2)^2 + tau/2d - e^2/4] as an exact rational.
Rational hilbert_O(const Threefold& x, std::int64_t n);

/// Same value, asserted integral. Throws INTERNAL_NON_INTEGER otherwise.
Integer chi_O(const Threefold& x, std::int64_t n);

}  // namespace nonvanish
