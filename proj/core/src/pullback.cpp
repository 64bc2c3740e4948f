#include "nonvanish/pullback.hpp"

#include <string>

#include "nonvanish/error.hpp"

namespace nonvanish {

H1Table::H1Table(std::int64_t n_min, std::int64_t n_max, std::map<std::int64_t, H1Entry> values)
    : n_min_(n_min), n_max_(n_max), values_(std::move(values)) {
  if (n_min_ > n_max_) {
    throw Error(ErrorCode::PreconditionViolated,
                "empty h1 window [" + std::to_string(n_min_) + ", " + std::to_string(n_max_) + "]");
  }
  for (const auto& [n, entry] : values_) {
    if (!contains(n)) {
      throw Error(ErrorCode::PreconditionViolated, "h1 entry at twist " + std::to_string(n) + " is outside the window");
    }
    if (entry.value < 0) {
      throw Error(ErrorCode::PreconditionViolated, "negative h1 value at twist " + std::to_string(n));
    }
  }
  if (static_cast<std::uint64_t>(n_max_ - n_min_) + 1 != values_.size()) {
    for (std::int64_t n = n_min_; n <= n_max_; ++n) {
      if (!values_.count(n)) {
        throw Error(ErrorCode::PreconditionViolated,
                    "h1 window has no entry for twist " + std::to_string(n) + " (write '>=0' when unknown)");
      }
    }
  }
}

const H1Entry& H1Table::at(std::int64_t n) const {
  auto it = values_.find(n);
  if (it == values_.end()) {
    throw Error(ErrorCode::WindowExceeded, "twist " + std::to_string(n) + " outside h1 window [" +
                                               std::to_string(n_min_) + ", " + std::to_string(n_max_) + "]");
  }
  return it->second;
}

BundleInvariants pullback_invariants(std::int64_t d, const P3BundleData& e) {
  if (d < 1) throw Error(ErrorCode::PreconditionViolated, "pull-back degree must be >= 1");
  require_normalized(e.invariants);
  const BundleInvariants f{e.invariants.c1, to_int64(to_integer(e.invariants.c2) * d), e.invariants.alpha};

  const Threefold p3 = hypersurface(1);
  const Threefold x{d, d - 5, 0};
  // delta does not depend on tau or epsilon
  if (derive(x, f).delta != d * derive(p3, e.invariants).delta) {
    throw Error(ErrorCode::InternalNonInteger, "delta(F) != d delta(E)");
  }
  return f;
}

H1Aggregate aggregate_h1(std::int64_t d, const P3BundleData& e, std::int64_t n) {
  if (d < 1) throw Error(ErrorCode::PreconditionViolated, "pull-back degree must be >= 1");
  if (!e.h1_table) throw Error(ErrorCode::WindowExceeded, "no h1 table supplied");
  const H1Table& table = *e.h1_table;
  if (!table.contains(n) || !table.contains(n - d + 1)) {
    throw Error(ErrorCode::WindowExceeded, "h1(F(" + std::to_string(n) + ")) needs twists [" +
                                               std::to_string(n - d + 1) + ", " + std::to_string(n) +
                                               "] outside the window [" + std::to_string(table.n_min()) + ", " +
                                               std::to_string(table.n_max()) + "]");
  }
  H1Aggregate out;
  for (std::int64_t j = 0; j < d; ++j) {
    const H1Entry& entry = table.at(n - j);
    out.value += entry.value;
    out.exact = out.exact && entry.exact;
  }
  return out;
}

}  // namespace nonvanish
