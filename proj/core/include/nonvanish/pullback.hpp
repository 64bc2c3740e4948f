#pragma once

// Pull-back of a bundle E on P^3 along the projection f: X -> P^3 of a smooth
// degree-d hypersurface X in P^4. Since f_* O_X splits as the sum of
// O(-i), i = 0..d-1, for every i
//
//   H^i(F(n)) = H^i(E(n)) + H^i(E(n-1)) + ... + H^i(E(n-d+1)),   F = f^* E,
//
// and F keeps c1 and alpha while c2(F) = d c2(E).

#include <cstdint>
#include <map>
#include <optional>

#include "nonvanish/bundle.hpp"

namespace nonvanish {

/// A known h1 value. exact = false records only a lower bound (">= value").
struct H1Entry {
  std::int64_t value = 0;
  bool exact = true;

  friend bool operator==(const H1Entry&, const H1Entry&) = default;
};

/// h1(E(n)) for every n in the window [n_min, n_max]; no extrapolation.
class H1Table {
 public:
  /// Throws PRECONDITION_VIOLATED if n_min > n_max, an entry is negative or
  /// outside the window, or a twist of the window is missing.
  H1Table(std::int64_t n_min, std::int64_t n_max, std::map<std::int64_t, H1Entry> values);

  std::int64_t n_min() const { return n_min_; }
  std::int64_t n_max() const { return n_max_; }
  const std::map<std::int64_t, H1Entry>& values() const { return values_; }
  bool contains(std::int64_t n) const { return n >= n_min_ && n <= n_max_; }
  const H1Entry& at(std::int64_t n) const;

  friend bool operator==(const H1Table&, const H1Table&) = default;

 private:
  std::int64_t n_min_;
  std::int64_t n_max_;
  std::map<std::int64_t, H1Entry> values_;
};

struct P3BundleData {
  BundleInvariants invariants;
  std::optional<H1Table> h1_table;
};

/// (c1, d c2, alpha). Throws PRECONDITION_VIOLATED if d < 1 or E is not normalized.
BundleInvariants pullback_invariants(std::int64_t d, const P3BundleData& e);

/// h1(F(n)) = value when exact, h1(F(n)) >= value otherwise.
struct H1Aggregate {
  std::int64_t value = 0;
  bool exact = true;

  friend bool operator==(const H1Aggregate&, const H1Aggregate&) = default;
};

/// Sum of h1(E(n-j)) for j = 0..d-1. Throws WINDOW_EXCEEDED when a needed
/// twist lies outside the table window (or there is no table).
H1Aggregate aggregate_h1(std::int64_t d, const P3BundleData& e, std::int64_t n);

}  // namespace nonvanish
