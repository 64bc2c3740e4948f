#include "nonvanish/cli/inputs.hpp"

#include <algorithm>

#include "nonvanish/error.hpp"

namespace nonvanish::cli {

std::optional<PicardMode> picard_from_word(std::string_view word) {
  if (word == "z") return PicardMode::PicZ;
  if (word == "num-z") return PicardMode::NumZ;
  return std::nullopt;
}

std::optional<VanishingMode> vanishing_from_word(std::string_view word) {
  if (word == "c2") return VanishingMode::FullC2;
  if (word == "c4") return VanishingMode::KodairaC4;
  return std::nullopt;
}

Threefold parse_threefold(const KvSection& s) {
  s.require_keys_within({"hypersurface_degree", "d", "epsilon", "tau", "picard_mode", "vanishing_mode"});
  Threefold x;
  if (s.has("hypersurface_degree")) {
    if (s.has("d") || s.has("epsilon") || s.has("tau")) {
      s.fail_at("hypersurface_degree", "give either hypersurface_degree or d/epsilon/tau, not both");
    }
    const std::int64_t deg = s.get_int("hypersurface_degree");
    if (deg < 1 || deg > 1'000'000) s.fail_at("hypersurface_degree", "must lie in [1, 10^6]");
    x = hypersurface(deg);
  } else {
    x.d = s.get_int("d");
    x.epsilon = s.get_int("epsilon");
    x.tau = s.get_int("tau");
  }
  if (s.has("picard_mode")) {
    auto m = picard_from_word(s.get_word("picard_mode"));
    if (!m) s.fail_at("picard_mode", "expected 'z' or 'num-z'");
    x.picard_mode = *m;
  }
  if (s.has("vanishing_mode")) {
    auto m = vanishing_from_word(s.get_word("vanishing_mode"));
    if (!m) s.fail_at("vanishing_mode", "expected 'c2' or 'c4'");
    x.vanishing_mode = *m;
  }
  return x;
}

BundleInvariants parse_bundle(const KvSection& s) {
  s.require_keys_within({"c1", "c2", "alpha"});
  BundleInvariants b;
  b.c1 = s.get_int("c1");
  b.c2 = s.get_int("c2");
  b.alpha = s.get_int("alpha");
  if (!b.normalized()) s.fail_at("c1", "must be 0 or -1 (normalized bundle)");
  return b;
}

KnownH1Support parse_known_h1(const KvSection& s) {
  s.require_keys_within({"window", "nonzero"});
  const IntRange w = s.get_range("window");
  KnownH1Support k{w.lo, w.hi, s.get_int_list("nonzero")};
  for (std::int64_t n : k.nonzero) {
    if (n < k.lo || n > k.hi) s.fail_at("nonzero", "twist " + std::to_string(n) + " lies outside the window");
  }
  std::sort(k.nonzero.begin(), k.nonzero.end());
  k.nonzero.erase(std::unique(k.nonzero.begin(), k.nonzero.end()), k.nonzero.end());
  return k;
}

AnalyzeInput parse_analyze_input(const KvDocument& doc) {
  doc.require_sections_within({"threefold", "bundle", "known_h1"});
  AnalyzeInput in;
  in.threefold = parse_threefold(doc.require("threefold"));
  if (const KvSection* b = doc.find("bundle")) in.bundle = parse_bundle(*b);
  if (const KvSection* k = doc.find("known_h1")) in.known = parse_known_h1(*k);
  return in;
}

PullbackInput parse_pullback_input(const KvDocument& doc) {
  doc.require_sections_within({"bundle", "pullback"});
  PullbackInput in;
  in.source.invariants = parse_bundle(doc.require("bundle"));
  const KvSection& p = doc.require("pullback");
  p.require_keys_within({"degree", "window", "h1"});
  in.degree = p.get_int("degree");
  if (in.degree < 1 || in.degree > 1'000'000) p.fail_at("degree", "must lie in [1, 10^6]");

  const bool has_window = p.has("window");
  std::map<std::int64_t, MapValue> raw;
  if (p.has("h1")) raw = p.get_int_map("h1");
  if (!has_window) {
    if (!raw.empty()) p.fail_at("h1", "a non-empty table needs 'window = lo..hi'");
    return in;
  }
  const IntRange w = p.get_range("window");
  if (w.size() > 100'000) p.fail_at("window", "window wider than 10^5 twists");
  std::map<std::int64_t, H1Entry> values;
  for (const auto& [n, v] : raw) values.emplace(n, H1Entry{v.value, !v.at_least});
  try {
    in.source.h1_table.emplace(w.lo, w.hi, std::move(values));
  } catch (const Error& e) {
    p.fail_at(p.has("h1") ? "h1" : "window", e.what());
  }
  return in;
}

}  // namespace nonvanish::cli
