#pragma once

// Non-vanishing certificates for h1(E(n)) derived from the numerical data of
// a normalized rank-2 bundle on a polarized threefold.
//
// Non-stable side (alpha <= 0):
//   T4_3  zeta0 < n <= -alpha-c1-1                 h1 >= (n - zeta0) delta
//   T4_5  n > zeta0, n >= e-alpha-c1+1, (n-zeta0)^2 < Q
//                                                  h1 >= -S(n)
//   T4_7  n >= e-alpha-c1+1, F(n+alpha-zeta0) < 0   h1 >= -(d/6) F(n+alpha-zeta0)
// Stable side:
//   T5_2    2 alpha >= e+5-c1, w0 <= n <= alpha-2   h1 != 0
//   T5_4_1  theta >= 0, zeta0 < n < zeta           h1 != 0
//   T5_4_3  theta >= 0, zeta integral, alpha < alpha_bar, n = alpha_bar-1
//
// with Q = 6 delta/d - tau/2d + e^2/4 - 3 c1^2/4,
//      S(n) = (d/6)(n - zeta0)[(n - zeta0)^2 - Q],
//      F(X) = X^3 + (lambda - 6 delta/d) X + 6 alpha delta/d.
// Bounds that are only "!= 0" are reported as lower bound 1.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nonvanish/bundle.hpp"
#include "nonvanish/exactnum.hpp"
#include "nonvanish/threefold.hpp"

namespace nonvanish {

enum class Theorem { T4_3, T4_5, T4_7, T5_2, T5_4_1, T5_4_3 };

std::string_view to_string(Theorem t) noexcept;
std::optional<Theorem> theorem_from_string(std::string_view s);

/// Certified h1(E(n)) >= lower_bound > 0. In NumZ mode n is the degree of a
/// numerical class and the bound holds for every line bundle of that degree.
struct NonvanishingCertificate {
  Theorem theorem = Theorem::T4_3;
  std::int64_t n = 0;
  Rational lower_bound{1};
  bool guard_ok = true;

  friend bool operator==(const NonvanishingCertificate&, const NonvanishingCertificate&) = default;
};

/// The five engines. StableTheta emits both T5_4_1 and T5_4_3 certificates.
enum class Engine { NonstableBasic, NonstableQuadratic, NonstableCubic, StableRange, StableTheta };

std::string_view to_string(Engine e) noexcept;
std::optional<Engine> engine_from_string(std::string_view s);

enum class EngineStatus { Applied, NotApplicable };

std::string_view to_string(EngineStatus s) noexcept;

/// NotApplicable: a hypothesis failed (reason in notes). Applied with no
/// certificates: hypotheses hold but the twist range is empty.
struct EngineResult {
  Engine engine = Engine::NonstableBasic;
  EngineStatus status = EngineStatus::Applied;
  std::vector<NonvanishingCertificate> certificates;
  std::vector<std::string> notes;
};

/// Upper limit on twists enumerated by a single engine; larger ranges throw
/// PRECONDITION_VIOLATED.
inline constexpr std::int64_t kMaxTwistsPerEngine = 1'000'000;

/// Vanishing guard for twist n. True in FullC2 mode or when epsilon < 0;
/// otherwise true iff n - alpha is not in {0, ..., epsilon}.
bool guard(const Threefold& x, const BundleInvariants& b, std::int64_t n);

EngineResult thm_nonstable_basic(const Threefold& x, const BundleInvariants& b, const DerivedInvariants& di);
EngineResult thm_nonstable_quadratic(const Threefold& x, const BundleInvariants& b, const DerivedInvariants& di);
EngineResult thm_nonstable_cubic(const Threefold& x, const BundleInvariants& b, const DerivedInvariants& di);
EngineResult thm_stable_range(const Threefold& x, const BundleInvariants& b, const DerivedInvariants& di);
EngineResult thm_stable_theta(const Threefold& x, const BundleInvariants& b, const DerivedInvariants& di);

/// Q = 6 delta/d - tau/2d + e^2/4 - 3 c1^2/4, the quadratic engine's gate.
Rational quadratic_gate(const Threefold& x, const BundleInvariants& b, const DerivedInvariants& di);

/// The cubic F(X) = X^3 + (lambda - 6 delta/d) X + 6 alpha delta/d.
Cubic nonstable_cubic(const Threefold& x, const BundleInvariants& b, const DerivedInvariants& di);

/// h1(E(n)) - h2(E(n)) = (n - zeta0) delta for a non-stable bundle and
/// zeta0 <= n <= -alpha-c1-1. Throws PRECONDITION_VIOLATED outside that range
/// or when alpha > 0.
Rational nonstable_euler_difference(const Threefold& x, const BundleInvariants& b, const DerivedInvariants& di,
                                    std::int64_t n);

/// chi(O_X(n-alpha)) - chi(O_X(e-n-alpha-c1)) - chi(E(n)), evaluated from the
/// Hilbert polynomials. Equals nonstable_euler_difference on its range.
Rational chi_combination(const Threefold& x, const BundleInvariants& b, const DerivedInvariants& di,
                         std::int64_t n);

/// Numerical precondition 2 alpha <= -e-3-c1 of the Num(X) = Z splitting
/// criterion. Its cohomological hypotheses cannot be checked from invariants.
/// Throws PRECONDITION_VIOLATED unless x.picard_mode is NumZ.
bool split_precondition(const Threefold& x, const BundleInvariants& b);

enum class AcmObstructionKind { AlphaTooLarge, ThetaNonnegative };

std::string_view to_string(AcmObstructionKind k) noexcept;
std::optional<AcmObstructionKind> acm_kind_from_string(std::string_view s);

struct AcmObstruction {
  AcmObstructionKind kind = AcmObstructionKind::AlphaTooLarge;
  std::string detail;

  friend bool operator==(const AcmObstruction&, const AcmObstruction&) = default;
};

/// Reasons E cannot be ACM: 2 alpha >= e+5-c1, or theta >= 0. An empty list
/// only means these criteria do not exclude ACM.
std::vector<AcmObstruction> acm_obstructions(const Threefold& x, const BundleInvariants& b,
                                             const DerivedInvariants& di);

/// User-supplied knowledge: on [lo, hi], h1(E(n)) != 0 exactly for n in nonzero.
struct KnownH1Support {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::vector<std::int64_t> nonzero;

  friend bool operator==(const KnownH1Support&, const KnownH1Support&) = default;
};

struct AnalysisConfig {
  std::optional<VanishingMode> vanishing;
  std::optional<PicardMode> picard;
  std::optional<KnownH1Support> known;
};

/// One certificate per twist after merging engines: strongest bound wins,
/// every engine tag that certified n is kept in contributors.
struct MergedCertificate {
  std::int64_t n = 0;
  Rational lower_bound{1};
  Theorem theorem = Theorem::T4_3;
  std::vector<Theorem> contributors;
  bool guard_ok = true;

  friend bool operator==(const MergedCertificate&, const MergedCertificate&) = default;
};

struct EngineSummary {
  Engine engine = Engine::NonstableBasic;
  EngineStatus status = EngineStatus::Applied;
  std::size_t count = 0;

  friend bool operator==(const EngineSummary&, const EngineSummary&) = default;
};

struct AnalysisReport {
  Threefold threefold;
  BundleInvariants bundle;
  ValidationReport validation;
  DerivedInvariants derived;
  Regime regime = Regime::Gap;
  bool split = false;
  std::vector<EngineSummary> engines;
  std::vector<MergedCertificate> certificates;  // sorted by n, unique n
  std::vector<AcmObstruction> acm_obstructions;
  std::optional<bool> split_precondition;  // NumZ mode only
  std::optional<bool> sharp;               // only with KnownH1Support
  std::vector<std::string> notes;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

/// Runs every engine, merges certificates, attaches ACM obstructions, the
/// split flag and applicability notes. Throws VALIDATION_FAILED when the
/// threefold fails validate() and PRECONDITION_VIOLATED when B is not normalized.
AnalysisReport analyze(const Threefold& x, const BundleInvariants& b, const AnalysisConfig& config = {});

}  // namespace nonvanish
