#pragma once

// Entity sections of the key-value input files.
//
//   [threefold]  hypersurface_degree = d            (full vanishing by default)
//                or d = .., epsilon = .., tau = ..  (Kodaira-type vanishing by default)
//                picard_mode = z | num-z,  vanishing_mode = c2 | c4   (optional)
//   [bundle]     c1, c2, alpha
//   [known_h1]   window = lo..hi, nonzero = n, n, ... | none
//   [pullback]   degree, window = lo..hi, h1 = {n: v, n: >=v, ...}
//                ([bundle] then describes E on P^3)

#include <cstdint>
#include <optional>
#include <string_view>

#include "nonvanish/bundle.hpp"
#include "nonvanish/cli/keyvalue.hpp"
#include "nonvanish/nonvanishing.hpp"
#include "nonvanish/pullback.hpp"
#include "nonvanish/threefold.hpp"

namespace nonvanish::cli {

std::optional<PicardMode> picard_from_word(std::string_view word);        // "z", "num-z"
std::optional<VanishingMode> vanishing_from_word(std::string_view word);  // "c2", "c4"

Threefold parse_threefold(const KvSection& s);
BundleInvariants parse_bundle(const KvSection& s);
KnownH1Support parse_known_h1(const KvSection& s);

struct AnalyzeInput {
  Threefold threefold;
  BundleInvariants bundle;
  std::optional<KnownH1Support> known;
};

/// [threefold] (required), [bundle] (optional for check), [known_h1] (optional).
AnalyzeInput parse_analyze_input(const KvDocument& doc);

struct PullbackInput {
  std::int64_t degree = 1;
  P3BundleData source;
};

/// [bundle] for E on P^3 and [pullback]. Table errors surface as PARSE_ERROR.
PullbackInput parse_pullback_input(const KvDocument& doc);

}  // namespace nonvanish::cli
