#include "nonvanish/nonvanishing.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>

#include "nonvanish/error.hpp"

namespace nonvanish {

namespace {

constexpr std::array<std::pair<Theorem, std::string_view>, 6> kTheoremNames{{
    {Theorem::T4_3, "T4_3"},
    {Theorem::T4_5, "T4_5"},
    {Theorem::T4_7, "T4_7"},
    {Theorem::T5_2, "T5_2"},
    {Theorem::T5_4_1, "T5_4_1"},
    {Theorem::T5_4_3, "T5_4_3"},
}};

constexpr std::array<std::pair<Engine, std::string_view>, 5> kEngineNames{{
    {Engine::NonstableBasic, "T4_3"},
    {Engine::NonstableQuadratic, "T4_5"},
    {Engine::NonstableCubic, "T4_7"},
    {Engine::StableRange, "T5_2"},
    {Engine::StableTheta, "T5_4"},
}};

std::string str(std::int64_t v) { return std::to_string(v); }

void check_range_size(std::int64_t lo, std::int64_t hi, Engine engine) {
  if (hi >= lo && hi - lo >= kMaxTwistsPerEngine) {
    throw Error(ErrorCode::PreconditionViolated, std::string(to_string(engine)) + ": twist range [" + str(lo) + ", " +
                                                     str(hi) + "] exceeds the enumeration limit");
  }
}

// Largest integer strictly below s.
std::int64_t last_integer_below(const Surd& s) {
  Integer k = floor_surd(s);
  if (surd_cmp(Rational(k), s) == std::strong_ordering::equal) k -= 1;
  return to_int64(k);
}

EngineResult not_applicable(Engine engine, std::string reason) {
  EngineResult r;
  r.engine = engine;
  r.status = EngineStatus::NotApplicable;
  r.notes.push_back(std::move(reason));
  return r;
}

// e - alpha - c1 + 1, the left endpoint shared by the quadratic and cubic engines.
std::int64_t upper_window_start(const Threefold& x, const BundleInvariants& b) {
  return x.epsilon - b.alpha - b.c1 + 1;
}

}  // namespace

std::string_view to_string(Theorem t) noexcept {
  for (const auto& [value, name] : kTheoremNames) {
    if (value == t) return name;
  }
  return "UNKNOWN";
}

std::optional<Theorem> theorem_from_string(std::string_view s) {
  for (const auto& [value, name] : kTheoremNames) {
    if (name == s) return value;
  }
  return std::nullopt;
}

std::string_view to_string(Engine e) noexcept {
  for (const auto& [value, name] : kEngineNames) {
    if (value == e) return name;
  }
  return "UNKNOWN";
}

std::optional<Engine> engine_from_string(std::string_view s) {
  for (const auto& [value, name] : kEngineNames) {
    if (name == s) return value;
  }
  return std::nullopt;
}

std::string_view to_string(EngineStatus s) noexcept {
  return s == EngineStatus::Applied ? "APPLIED" : "NOT_APPLICABLE";
}

std::string_view to_string(AcmObstructionKind k) noexcept {
  return k == AcmObstructionKind::AlphaTooLarge ? "ALPHA_TOO_LARGE" : "THETA_NONNEGATIVE";
}

std::optional<AcmObstructionKind> acm_kind_from_string(std::string_view s) {
  if (s == "ALPHA_TOO_LARGE") return AcmObstructionKind::AlphaTooLarge;
  if (s == "THETA_NONNEGATIVE") return AcmObstructionKind::ThetaNonnegative;
  return std::nullopt;
}

bool guard(const Threefold& x, const BundleInvariants& b, std::int64_t n) {
  if (x.vanishing_mode == VanishingMode::FullC2 || x.epsilon < 0) return true;
  const std::int64_t shifted = n - b.alpha;
  return shifted < 0 || shifted > x.epsilon;
}

Rational quadratic_gate(const Threefold& x, const BundleInvariants& b, const DerivedInvariants& di) {
  return Rational(Integer(6 * di.delta), to_integer(x.d)) - di.lambda -
         Rational(to_integer(3 * b.c1 * b.c1), 4);
}

Cubic nonstable_cubic(const Threefold& x, const BundleInvariants& b, const DerivedInvariants& di) {
  const Integer d = to_integer(x.d);
  return Cubic{di.lambda - Rational(Integer(6 * di.delta), d),
               Rational(Integer(6 * to_integer(b.alpha) * di.delta), d)};
}

EngineResult thm_nonstable_basic(const Threefold& x, const BundleInvariants& b, const DerivedInvariants& di) {
  constexpr Engine engine = Engine::NonstableBasic;
  if (b.alpha > 0) return not_applicable(engine, "requires alpha <= 0, got alpha = " + str(b.alpha));

  EngineResult r;
  r.engine = engine;
  const std::int64_t hi = -b.alpha - b.c1 - 1;
  const std::int64_t lo = to_int64(di.w0);
  if (lo > hi) {
    r.notes.push_back("empty range: needs 2 alpha <= -(epsilon + 3 + c1)");
    return r;
  }
  if (di.delta == 0) {
    r.notes.push_back("delta = 0 (split): h1 - h2 vanishes on the range, nothing follows");
    return r;
  }
  if (di.delta < 0) {
    r.notes.push_back("delta = " + di.delta.get_str() + " < 0 cannot come from a non-split bundle; no certificate");
    return r;
  }
  check_range_size(lo, hi, engine);
  for (std::int64_t n = lo; n <= hi; ++n) {
    const Rational bound = (Rational(n) - di.zeta0) * Rational(di.delta);
    r.certificates.push_back({Theorem::T4_3, n, bound, guard(x, b, n)});
  }
  return r;
}

EngineResult thm_nonstable_quadratic(const Threefold& x, const BundleInvariants& b, const DerivedInvariants& di) {
  constexpr Engine engine = Engine::NonstableQuadratic;
  if (b.alpha > 0) return not_applicable(engine, "requires alpha <= 0, got alpha = " + str(b.alpha));
  const Rational q = quadratic_gate(x, b, di);
  if (q.sign() < 0) {
    return not_applicable(engine, "requires 6 delta/d - tau/2d + epsilon^2/4 - 3 c1^2/4 >= 0, got " + q.str());
  }

  EngineResult r;
  r.engine = engine;
  if (x.epsilon <= -2) {
    r.notes.push_back("epsilon <= -2: sign condition holds for every alpha <= 0 (negative discriminant)");
  } else if (x.epsilon == -1) {
    r.notes.push_back("epsilon = -1: sign condition checked separately for alpha <= -2, alpha = -1, alpha = 0");
  } else if (x.epsilon == 0) {
    r.notes.push_back("epsilon = 0: sign condition follows from 2 alpha^2 + tau/d > 0 and n + alpha <= 0");
  }

  const std::int64_t lo = std::max(to_int64(di.w0), upper_window_start(x, b));
  const std::int64_t hi = last_integer_below(Surd(di.zeta0, q));
  if (lo > hi) return r;
  check_range_size(lo, hi, engine);
  const Rational sixth_d(to_integer(x.d), 6);
  for (std::int64_t n = lo; n <= hi; ++n) {
    const Rational t = Rational(n) - di.zeta0;
    // (n - zeta0)^2 < Q and n > zeta0 force S(n) < 0
    const Rational s = sixth_d * t * (t * t - q);
    r.certificates.push_back({Theorem::T4_5, n, -s, guard(x, b, n)});
  }
  return r;
}

EngineResult thm_nonstable_cubic(const Threefold& x, const BundleInvariants& b, const DerivedInvariants& di) {
  constexpr Engine engine = Engine::NonstableCubic;
  if (b.alpha > 0) return not_applicable(engine, "requires alpha <= 0, got alpha = " + str(b.alpha));
  if (di.delta == 0) {
    return not_applicable(engine, "delta = 0 (split): the hypotheses cannot hold for a valid threefold");
  }
  // Gate as printed: no 3 c1^2/4 term.
  const Rational gate = Rational(Integer(6 * di.delta), to_integer(x.d)) - di.lambda;
  if (gate.sign() > 0) {
    std::string reason = "requires 6 delta/d - tau/2d + epsilon^2/4 <= 0, got " + gate.str();
    if (b.c1 == -1 && gate <= Rational(Integer(3), Integer(4))) {
      reason += "; with the 3 c1^2/4 term included the gate would pass (conventions disagree for c1 = -1)";
    }
    return not_applicable(engine, reason);
  }

  EngineResult r;
  r.engine = engine;
  const Cubic f = nonstable_cubic(x, b, di);
  const RootBracket root = cubic_unique_root_bracket(f, Rational(Integer(1), Integer(1024)));
  r.notes.push_back("F(X) = X^3 + (" + f.p.str() + ") X + (" + f.q.str() + "), unique real root in [" +
                    root.lo.str() + ", " + root.hi.str() + "]");

  const Rational shift = Rational(b.alpha) - di.zeta0;
  const Rational sixth_d(to_integer(x.d), 6);
  std::int64_t n = upper_window_start(x, b);
  for (std::int64_t steps = 0;; ++n, ++steps) {
    const Rational arg = Rational(n) + shift;
    if (cubic_sign(f, arg) >= 0) break;
    if (steps >= kMaxTwistsPerEngine) {
      throw Error(ErrorCode::PreconditionViolated, "T4_7: twist range exceeds the enumeration limit");
    }
    r.certificates.push_back({Theorem::T4_7, n, -(sixth_d * f(arg)), guard(x, b, n)});
  }
  return r;
}

EngineResult thm_stable_range(const Threefold& x, const BundleInvariants& b, const DerivedInvariants& di) {
  constexpr Engine engine = Engine::StableRange;
  if (2 * b.alpha < x.epsilon + 5 - b.c1) {
    return not_applicable(engine, "requires 2 alpha >= epsilon + 5 - c1 = " + str(x.epsilon + 5 - b.c1) +
                                      ", got 2 alpha = " + str(2 * b.alpha));
  }
  EngineResult r;
  r.engine = engine;
  const std::int64_t lo = to_int64(di.w0);
  const std::int64_t hi = b.alpha - 2;
  check_range_size(lo, hi, engine);
  for (std::int64_t n = lo; n <= hi; ++n) r.certificates.push_back({Theorem::T5_2, n, Rational(1), true});
  return r;
}

EngineResult thm_stable_theta(const Threefold& /*x*/, const BundleInvariants& b, const DerivedInvariants& di) {
  constexpr Engine engine = Engine::StableTheta;
  if (!di.zeta) return not_applicable(engine, "requires theta >= 0, got theta = " + di.theta.str());

  EngineResult r;
  r.engine = engine;
  const Surd& zeta = *di.zeta;
  const std::int64_t lo = to_int64(di.w0);
  const std::int64_t hi = last_integer_below(zeta);
  if (lo <= hi) {
    check_range_size(lo, hi, engine);
    for (std::int64_t n = lo; n <= hi; ++n) r.certificates.push_back({Theorem::T5_4_1, n, Rational(1), true});
  }
  if (zeta.is_integer() && to_integer(b.alpha) < *di.alpha_bar) {
    r.certificates.push_back({Theorem::T5_4_3, to_int64(*di.alpha_bar - 1), Rational(1), true});
  }
  return r;
}

Rational nonstable_euler_difference(const Threefold& /*x*/, const BundleInvariants& b, const DerivedInvariants& di,
                                    std::int64_t n) {
  if (b.alpha > 0) throw Error(ErrorCode::PreconditionViolated, "requires alpha <= 0");
  const Rational twist(n);
  if (twist < di.zeta0 || n > -b.alpha - b.c1 - 1) {
    throw Error(ErrorCode::PreconditionViolated, "twist " + str(n) + " outside [zeta0, -alpha-c1-1] = [" +
                                                     di.zeta0.str() + ", " + str(-b.alpha - b.c1 - 1) + "]");
  }
  return (twist - di.zeta0) * Rational(di.delta);
}

Rational chi_combination(const Threefold& x, const BundleInvariants& b, const DerivedInvariants& di,
                         std::int64_t n) {
  return hilbert_O(x, n - b.alpha) - hilbert_O(x, x.epsilon - n - b.alpha - b.c1) - hilbert_E(x, di, n);
}

bool split_precondition(const Threefold& x, const BundleInvariants& b) {
  if (x.picard_mode != PicardMode::NumZ) {
    throw Error(ErrorCode::PreconditionViolated, "split precondition is defined for Num(X) = Z mode only");
  }
  return 2 * b.alpha <= -x.epsilon - 3 - b.c1;
}

std::vector<AcmObstruction> acm_obstructions(const Threefold& x, const BundleInvariants& b,
                                             const DerivedInvariants& di) {
  std::vector<AcmObstruction> out;
  if (2 * b.alpha >= x.epsilon + 5 - b.c1) {
    out.push_back({AcmObstructionKind::AlphaTooLarge,
                   "2 alpha = " + str(2 * b.alpha) + " >= epsilon + 5 - c1 = " + str(x.epsilon + 5 - b.c1)});
  }
  if (di.theta.sign() >= 0) {
    out.push_back({AcmObstructionKind::ThetaNonnegative, "theta = " + di.theta.str() + " >= 0"});
  }
  return out;
}

AnalysisReport analyze(const Threefold& input, const BundleInvariants& b, const AnalysisConfig& config) {
  Threefold x = input;
  if (config.vanishing) x.vanishing_mode = *config.vanishing;
  if (config.picard) x.picard_mode = *config.picard;

  AnalysisReport report;
  report.threefold = x;
  report.bundle = b;
  report.validation = validate(x);
  if (!report.validation.ok) {
    std::ostringstream msg;
    msg << "threefold (" << x.d << ", " << x.epsilon << ", " << x.tau << ") rejected:";
    for (const auto& v : report.validation.violations) msg << " [" << v.rule << "] " << v.message << ";";
    throw Error(ErrorCode::ValidationFailed, msg.str());
  }
  require_normalized(b);

  report.derived = derive(x, b);
  const DerivedInvariants& di = report.derived;
  report.regime = regime(x, b);
  report.split = is_split_numeric(di);
  auto& notes = report.notes;

  // A cubic is integer-valued iff it is integral at four consecutive integers.
  for (std::int64_t n = 0; n < 4; ++n) {
    const Rational v = hilbert_E(x, di, n);
    if (!v.is_integer()) {
      notes.push_back("chi(E(" + str(n) + ")) = " + v.str() +
                      " is not an integer: no bundle on X has these invariants, certificates are vacuous");
      break;
    }
  }

  const std::array<Engine, 5> order{Engine::NonstableBasic, Engine::NonstableQuadratic, Engine::NonstableCubic,
                                    Engine::StableRange, Engine::StableTheta};
  std::map<std::int64_t, MergedCertificate> merged;

  if (report.split) {
    notes.push_back("delta = 0: numerically split, no engine applies and nothing can be said on non-vanishing");
    for (Engine e : order) report.engines.push_back({e, EngineStatus::NotApplicable, 0});
  } else {
    for (Engine e : order) {
      EngineResult r;
      switch (e) {
        case Engine::NonstableBasic: r = thm_nonstable_basic(x, b, di); break;
        case Engine::NonstableQuadratic: r = thm_nonstable_quadratic(x, b, di); break;
        case Engine::NonstableCubic: r = thm_nonstable_cubic(x, b, di); break;
        case Engine::StableRange: r = thm_stable_range(x, b, di); break;
        case Engine::StableTheta: r = thm_stable_theta(x, b, di); break;
      }
      report.engines.push_back({e, r.status, r.certificates.size()});
      for (auto& note : r.notes) notes.push_back(std::string(to_string(e)) + ": " + note);

      for (const auto& c : r.certificates) {
        auto [it, inserted] = merged.try_emplace(c.n);
        MergedCertificate& m = it->second;
        if (inserted) {
          m = {c.n, c.lower_bound, c.theorem, {c.theorem}, c.guard_ok};
          continue;
        }
        if (std::find(m.contributors.begin(), m.contributors.end(), c.theorem) == m.contributors.end()) {
          m.contributors.push_back(c.theorem);
        }
        if (c.lower_bound > m.lower_bound) {
          m.lower_bound = c.lower_bound;
          m.theorem = c.theorem;
          m.guard_ok = c.guard_ok;
        }
      }
    }
  }
  for (auto& [n, m] : merged) report.certificates.push_back(std::move(m));

  report.acm_obstructions = acm_obstructions(x, b, di);

  if (b.alpha <= 0 && x.epsilon <= -2 && !report.split) {
    notes.push_back("epsilon <= -2: T4_5/T4_7 add twists only beyond -alpha-c1-1 = " + str(-b.alpha - b.c1 - 1));
  }
  if (report.regime == Regime::Gap) {
    notes.push_back("alpha lies in the gap -(epsilon+3+c1)/2 < alpha < (epsilon+5-c1)/2 where non-split ACM "
                    "bundles are not excluded");
  }
  if (x.vanishing_mode == VanishingMode::KodairaC4) {
    if (x.epsilon < 0) {
      notes.push_back("vanishing mode c4 with epsilon < 0: Kodaira-type vanishing holds in every degree");
    } else {
      bool all_ok = true;
      for (const auto& c : report.certificates) all_ok = all_ok && c.guard_ok;
      notes.push_back(all_ok ? "vanishing mode c4: every certified twist has n - alpha outside {0..epsilon}"
                             : "vanishing mode c4: some certified twists need the vanishing assumption (guard_ok = "
                               "false)");
    }
  }
  const bool stable_side = std::any_of(report.certificates.begin(), report.certificates.end(), [](const auto& c) {
    return c.theorem == Theorem::T5_2 || c.theorem == Theorem::T5_4_1 || c.theorem == Theorem::T5_4_3;
  });
  if (stable_side) {
    notes.push_back("stable-side certificates need no vanishing of h1(O_X(n)); vanishing at m <= alpha-2 "
                    "propagates to all n <= m, but certificates are not extended by it");
  }
  if (x.picard_mode == PicardMode::NumZ) {
    report.split_precondition = split_precondition(x, b);
    notes.push_back("Num(X) = Z: n is the degree of a numerical class; each certificate holds for every line "
                    "bundle L of that degree");
    notes.push_back(*report.split_precondition
                        ? "2 alpha <= -epsilon-3-c1 holds: splitting criterion applicable given its cohomological "
                          "hypotheses"
                        : "2 alpha <= -epsilon-3-c1 fails: splitting criterion not applicable");
  }

  if (config.known) {
    const KnownH1Support& k = *config.known;
    const std::set<std::int64_t> known(k.nonzero.begin(), k.nonzero.end());
    std::set<std::int64_t> certified;
    bool inside = true;
    for (const auto& c : report.certificates) {
      certified.insert(c.n);
      if (c.n < k.lo || c.n > k.hi) inside = false;
      if (c.n >= k.lo && c.n <= k.hi && !known.count(c.n)) {
        notes.push_back("conflict: twist " + str(c.n) + " is certified but listed as h1 = 0");
      }
    }
    report.sharp = inside && certified == known;
    if (*report.sharp) {
      notes.push_back("sharp: certified twists equal the known non-vanishing set on [" + str(k.lo) + ", " +
                      str(k.hi) + "]");
    }
  }
  return report;
}

}  // namespace nonvanish
