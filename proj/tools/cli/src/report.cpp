#include "nonvanish/cli/report.hpp"

#include <sstream>

#include "nonvanish/error.hpp"

namespace nonvanish::cli {

namespace {

using nlohmann::json;

std::string istr(const Integer& v) { return v.get_str(); }

Integer integer_from(const json& j) {
  const Rational r = Rational::parse(j.get<std::string>());
  if (!r.is_integer()) throw Error(ErrorCode::ParseError, "expected an integer string, got " + j.dump());
  return r.numerator();
}

Rational rational_from(const json& j) { return Rational::parse(j.get<std::string>()); }

template <typename Enum, typename Lookup>
Enum enum_from(const json& j, Lookup lookup, const char* what) {
  const auto s = j.get<std::string>();
  auto v = lookup(s);
  if (!v) throw Error(ErrorCode::ParseError, std::string("unknown ") + what + " '" + s + "'");
  return *v;
}

std::optional<PicardMode> picard_from_name(std::string_view s) {
  if (s == to_string(PicardMode::PicZ)) return PicardMode::PicZ;
  if (s == to_string(PicardMode::NumZ)) return PicardMode::NumZ;
  return std::nullopt;
}

std::optional<VanishingMode> vanishing_from_name(std::string_view s) {
  if (s == to_string(VanishingMode::FullC2)) return VanishingMode::FullC2;
  if (s == to_string(VanishingMode::KodairaC4)) return VanishingMode::KodairaC4;
  return std::nullopt;
}

std::optional<Regime> regime_from_name(std::string_view s) {
  for (Regime r : {Regime::NonstableStrong, Regime::Gap, Regime::StableStrong}) {
    if (s == to_string(r)) return r;
  }
  return std::nullopt;
}

std::optional<EngineStatus> status_from_name(std::string_view s) {
  if (s == to_string(EngineStatus::Applied)) return EngineStatus::Applied;
  if (s == to_string(EngineStatus::NotApplicable)) return EngineStatus::NotApplicable;
  return std::nullopt;
}

std::string zeta_text(const Surd& z) {
  std::string s = z.str();
  if (auto root = exact_sqrt(z.radicand())) s += " = " + (z.base() + *root).str();
  return s;
}

void field(std::ostringstream& os, std::string_view label, const std::string& value) {
  os << label;
  for (std::size_t i = label.size(); i < 14; ++i) os << ' ';
  os << value << '\n';
}

}  // namespace

ordered_json to_json(const Threefold& x) {
  return {{"d", x.d},
          {"epsilon", x.epsilon},
          {"tau", x.tau},
          {"picard_mode", to_string(x.picard_mode)},
          {"vanishing_mode", to_string(x.vanishing_mode)}};
}

ordered_json to_json(const BundleInvariants& b) { return {{"c1", b.c1}, {"c2", b.c2}, {"alpha", b.alpha}}; }

ordered_json to_json(const ValidationReport& v) {
  ordered_json violations = ordered_json::array();
  for (const auto& x : v.violations) violations.push_back({{"rule", x.rule}, {"message", x.message}});
  return {{"ok", v.ok}, {"violations", violations}};
}

ordered_json to_json(const DerivedInvariants& di) {
  ordered_json j{{"delta", istr(di.delta)}, {"theta", di.theta.str()}, {"zeta0", di.zeta0.str()},
                 {"w0", istr(di.w0)},        {"lambda", di.lambda.str()}};
  if (di.zeta) {
    j["zeta"] = {{"base", di.zeta->base().str()}, {"radicand", di.zeta->radicand().str()}};
  } else {
    j["zeta"] = nullptr;
  }
  j["alpha_bar"] = di.alpha_bar ? ordered_json(istr(*di.alpha_bar)) : ordered_json(nullptr);
  return j;
}

ordered_json to_json(const AnalysisReport& r) {
  ordered_json engines = ordered_json::array();
  for (const auto& e : r.engines) {
    engines.push_back({{"engine", to_string(e.engine)}, {"status", to_string(e.status)}, {"certificates", e.count}});
  }
  ordered_json certs = ordered_json::array();
  for (const auto& c : r.certificates) {
    ordered_json contributors = ordered_json::array();
    for (Theorem t : c.contributors) contributors.push_back(to_string(t));
    certs.push_back({{"n", c.n},
                     {"lower_bound", c.lower_bound.str()},
                     {"theorem", to_string(c.theorem)},
                     {"contributors", contributors},
                     {"guard_ok", c.guard_ok}});
  }
  ordered_json acm = ordered_json::array();
  for (const auto& a : r.acm_obstructions) acm.push_back({{"kind", to_string(a.kind)}, {"detail", a.detail}});

  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "analysis";
  j["threefold"] = to_json(r.threefold);
  j["bundle"] = to_json(r.bundle);
  j["validation"] = to_json(r.validation);
  j["derived"] = to_json(r.derived);
  j["regime"] = to_string(r.regime);
  j["split"] = r.split;
  j["engines"] = engines;
  j["certificates"] = certs;
  j["acm_obstructions"] = acm;
  j["split_precondition"] = r.split_precondition ? ordered_json(*r.split_precondition) : ordered_json(nullptr);
  j["sharp"] = r.sharp ? ordered_json(*r.sharp) : ordered_json(nullptr);
  j["notes"] = r.notes;
  return j;
}

Threefold threefold_from_json(const json& j) {
  Threefold x;
  x.d = j.at("d").get<std::int64_t>();
  x.epsilon = j.at("epsilon").get<std::int64_t>();
  x.tau = j.at("tau").get<std::int64_t>();
  x.picard_mode = enum_from<PicardMode>(j.at("picard_mode"), picard_from_name, "picard mode");
  x.vanishing_mode = enum_from<VanishingMode>(j.at("vanishing_mode"), vanishing_from_name, "vanishing mode");
  return x;
}

BundleInvariants bundle_from_json(const json& j) {
  return {j.at("c1").get<std::int64_t>(), j.at("c2").get<std::int64_t>(), j.at("alpha").get<std::int64_t>()};
}

ValidationReport validation_from_json(const json& j) {
  ValidationReport v;
  v.ok = j.at("ok").get<bool>();
  for (const auto& x : j.at("violations")) {
    v.violations.push_back({x.at("rule").get<std::string>(), x.at("message").get<std::string>()});
  }
  return v;
}

DerivedInvariants derived_from_json(const json& j) {
  DerivedInvariants di;
  di.delta = integer_from(j.at("delta"));
  di.theta = rational_from(j.at("theta"));
  di.zeta0 = rational_from(j.at("zeta0"));
  di.w0 = integer_from(j.at("w0"));
  di.lambda = rational_from(j.at("lambda"));
  if (!j.at("zeta").is_null()) {
    di.zeta = Surd(rational_from(j.at("zeta").at("base")), rational_from(j.at("zeta").at("radicand")));
  }
  if (!j.at("alpha_bar").is_null()) di.alpha_bar = integer_from(j.at("alpha_bar"));
  return di;
}

AnalysisReport report_from_json(const json& j) {
  try {
    if (j.at("schema_version").get<int>() != kSchemaVersion) {
      throw Error(ErrorCode::ParseError, "unsupported schema_version " + j.at("schema_version").dump());
    }
    if (j.at("kind").get<std::string>() != "analysis") {
      throw Error(ErrorCode::ParseError, "document kind is not 'analysis'");
    }
    AnalysisReport r;
    r.threefold = threefold_from_json(j.at("threefold"));
    r.bundle = bundle_from_json(j.at("bundle"));
    r.validation = validation_from_json(j.at("validation"));
    r.derived = derived_from_json(j.at("derived"));
    r.regime = enum_from<Regime>(j.at("regime"), regime_from_name, "regime");
    r.split = j.at("split").get<bool>();
    for (const auto& e : j.at("engines")) {
      r.engines.push_back({enum_from<Engine>(e.at("engine"), engine_from_string, "engine"),
                           enum_from<EngineStatus>(e.at("status"), status_from_name, "engine status"),
                           e.at("certificates").get<std::size_t>()});
    }
    for (const auto& c : j.at("certificates")) {
      MergedCertificate m;
      m.n = c.at("n").get<std::int64_t>();
      m.lower_bound = rational_from(c.at("lower_bound"));
      m.theorem = enum_from<Theorem>(c.at("theorem"), theorem_from_string, "theorem");
      for (const auto& t : c.at("contributors")) {
        m.contributors.push_back(enum_from<Theorem>(t, theorem_from_string, "theorem"));
      }
      m.guard_ok = c.at("guard_ok").get<bool>();
      r.certificates.push_back(std::move(m));
    }
    for (const auto& a : j.at("acm_obstructions")) {
      r.acm_obstructions.push_back({enum_from<AcmObstructionKind>(a.at("kind"), acm_kind_from_string, "ACM kind"),
                                    a.at("detail").get<std::string>()});
    }
    if (!j.at("split_precondition").is_null()) r.split_precondition = j.at("split_precondition").get<bool>();
    if (!j.at("sharp").is_null()) r.sharp = j.at("sharp").get<bool>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed report document: ") + e.what());
  }
}

std::string render_structured(const AnalysisReport& r) { return to_json(r).dump(2) + "\n"; }

std::string threefold_line(const Threefold& x) {
  std::ostringstream os;
  os << "(d, epsilon, tau) = (" << x.d << ", " << x.epsilon << ", " << x.tau << ")";
  return os.str();
}

std::string render_validation_text(const Threefold& x, const ValidationReport& v) {
  std::ostringstream os;
  field(os, "threefold", threefold_line(x));
  field(os, "validation", v.ok ? "ok" : "rejected");
  for (const auto& violation : v.violations) os << "  [" << violation.rule << "] " << violation.message << '\n';
  return os.str();
}

std::string render_validation_structured(const Threefold& x, const ValidationReport& v) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "validation";
  j["threefold"] = to_json(x);
  j["validation"] = to_json(v);
  return j.dump(2) + "\n";
}

std::string render_text(const AnalysisReport& r) {
  std::ostringstream os;
  const DerivedInvariants& di = r.derived;
  field(os, "threefold", threefold_line(r.threefold) + "  picard " + std::string(to_string(r.threefold.picard_mode)) +
                             "  vanishing " + std::string(to_string(r.threefold.vanishing_mode)));
  field(os, "bundle", "c1 = " + std::to_string(r.bundle.c1) + "  c2 = " + std::to_string(r.bundle.c2) +
                          "  alpha = " + std::to_string(r.bundle.alpha));
  field(os, "validation", r.validation.ok ? "ok" : "rejected");
  field(os, "delta", istr(di.delta));
  field(os, "theta", di.theta.str());
  field(os, "zeta0", di.zeta0.str());
  field(os, "w0", istr(di.w0));
  field(os, "lambda", di.lambda.str());
  field(os, "zeta", di.zeta ? zeta_text(*di.zeta) : "undefined (theta < 0)");
  field(os, "alpha_bar", di.alpha_bar ? istr(*di.alpha_bar) : "undefined (theta < 0)");
  field(os, "regime", std::string(to_string(r.regime)));
  field(os, "split", r.split ? "yes" : "no");
  if (r.split_precondition) field(os, "split_precondition", *r.split_precondition ? "holds" : "fails");

  os << "engines\n";
  for (const auto& e : r.engines) {
    os << "  " << to_string(e.engine) << "  " << to_string(e.status) << "  " << e.count << '\n';
  }

  os << "certificates (" << r.certificates.size() << ")\n";
  const bool sharp = r.sharp.value_or(false);
  for (const auto& c : r.certificates) {
    os << "  n = " << c.n << "  h1 >= " << c.lower_bound.str() << "  " << to_string(c.theorem);
    if (c.contributors.size() > 1) {
      os << " (";
      for (std::size_t i = 0; i < c.contributors.size(); ++i) os << (i ? ", " : "") << to_string(c.contributors[i]);
      os << ")";
    }
    if (!c.guard_ok) os << "  guard_ok = false";
    if (sharp) os << "  sharp";
    os << '\n';
  }

  os << "acm_obstructions (" << r.acm_obstructions.size() << ")\n";
  for (const auto& a : r.acm_obstructions) os << "  " << to_string(a.kind) << ": " << a.detail << '\n';

  if (!r.notes.empty()) {
    os << "notes\n";
    for (const auto& n : r.notes) os << "  - " << n << '\n';
  }
  return os.str();
}

}  // namespace nonvanish::cli
