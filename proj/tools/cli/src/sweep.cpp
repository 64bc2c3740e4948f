#include "nonvanish/cli/sweep.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "nonvanish/cli/inputs.hpp"
#include "nonvanish/error.hpp"

namespace nonvanish::cli {

SweepSpec parse_sweep_spec(const KvDocument& doc) {
  doc.require_sections_within({"threefold", "sweep"});
  const KvSection& s = doc.require("sweep");
  s.require_keys_within({"hypersurface_degree", "c1", "c2", "alpha", "out"});
  SweepSpec spec;

  const KvSection* t = doc.find("threefold");
  if (s.has("hypersurface_degree")) {
    if (t) s.fail_at("hypersurface_degree", "give either [threefold] or hypersurface_degree, not both");
    const IntRange degrees = s.get_range("hypersurface_degree");
    if (degrees.lo < 1 || degrees.hi > 1'000'000) s.fail_at("hypersurface_degree", "degrees must lie in [1, 10^6]");
    for (std::int64_t d = degrees.lo; d <= degrees.hi; ++d) spec.threefolds.push_back(hypersurface(d));
  } else if (t) {
    spec.threefolds.push_back(parse_threefold(*t));
  } else {
    throw Error(ErrorCode::ParseError, doc.source() + ":" + std::to_string(s.line()) +
                                           ":1: sweep needs a [threefold] section or hypersurface_degree");
  }

  spec.c1s = s.get_int_list("c1");
  if (spec.c1s.empty()) s.fail_at("c1", "needs at least one of 0, -1");
  for (std::size_t i = 0; i < spec.c1s.size(); ++i) {
    const std::int64_t c1 = spec.c1s[i];
    if (c1 != 0 && c1 != -1) s.fail_at("c1", "values must be 0 or -1");
    for (std::size_t j = 0; j < i; ++j) {
      if (spec.c1s[j] == c1) s.fail_at("c1", "duplicate value " + std::to_string(c1));
    }
  }
  spec.c2 = s.get_range("c2");
  spec.alpha = s.get_range("alpha");
  if (s.has("out")) spec.out = s.get("out").text;
  return spec;
}

Integer grid_size(const SweepSpec& spec) {
  return Integer(static_cast<unsigned long>(spec.threefolds.size())) *
         Integer(static_cast<unsigned long>(spec.c1s.size())) * Integer(static_cast<unsigned long>(spec.c2.size())) *
         Integer(static_cast<unsigned long>(spec.alpha.size()));
}

SweepRow row_from_report(const AnalysisReport& r) {
  SweepRow row;
  row.threefold = r.threefold;
  row.bundle = r.bundle;
  row.status = "ok";
  row.regime = r.regime;
  row.split = r.split;
  row.certificate_count = r.certificates.size();
  if (!r.certificates.empty()) row.max_twist = r.certificates.back().n;
  for (const auto& a : r.acm_obstructions) row.acm.push_back(a.kind);
  for (const auto& c : r.certificates) row.contributors.push_back(c.contributors);
  return row;
}

SweepRow sweep_point(const Threefold& x, const BundleInvariants& b) {
  const ValidationReport v = validate(x);
  if (!v.ok) {
    SweepRow row;
    row.threefold = x;
    row.bundle = b;
    row.status = "rejected:";
    for (std::size_t i = 0; i < v.violations.size(); ++i) row.status += (i ? "|" : "") + v.violations[i].rule;
    return row;
  }
  try {
    return row_from_report(analyze(x, b));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::PreconditionViolated) throw;
    SweepRow row;
    row.threefold = x;
    row.bundle = b;
    row.status = std::string(to_string(e.code()));
    row.regime = regime(x, b);
    return row;
  }
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, std::uint64_t cap, unsigned jobs) {
  const Integer size = grid_size(spec);
  if (size > Integer(static_cast<unsigned long>(cap))) {
    throw Error(ErrorCode::GridTooLarge, "grid has " + size.get_str() + " points, cap is " + std::to_string(cap));
  }
  const std::uint64_t total = size.get_ui();
  const std::uint64_t per_threefold = total / std::max<std::uint64_t>(spec.threefolds.size(), 1);
  const std::uint64_t per_c1 = spec.c2.size() * spec.alpha.size();

  auto point = [&](std::uint64_t i) {
    const Threefold& x = spec.threefolds[i / per_threefold];
    const std::uint64_t rest = i % per_threefold;
    BundleInvariants b;
    b.c1 = spec.c1s[rest / per_c1];
    b.c2 = spec.c2.lo + static_cast<std::int64_t>((rest % per_c1) / spec.alpha.size());
    b.alpha = spec.alpha.lo + static_cast<std::int64_t>(rest % spec.alpha.size());
    return sweep_point(x, b);
  };

  std::vector<SweepRow> rows(total);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::uint64_t i = next++; i < total; i = next++) {
      try {
        rows[i] = point(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = total;
        return;
      }
    }
  };

  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::string csv_header() { return "d,epsilon,tau,c1,c2,alpha,status,regime,split,certificates,max_twist,acm_obstructions"; }

std::string csv_row(const SweepRow& row) {
  std::ostringstream os;
  os << row.threefold.d << ',' << row.threefold.epsilon << ',' << row.threefold.tau << ',' << row.bundle.c1 << ','
     << row.bundle.c2 << ',' << row.bundle.alpha << ',' << row.status << ','
     << (row.regime ? to_string(*row.regime) : "") << ',' << (row.split ? "true" : "false") << ','
     << row.certificate_count << ',';
  if (row.max_twist) os << *row.max_twist;
  os << ',';
  if (row.acm.empty()) os << "none";
  for (std::size_t i = 0; i < row.acm.size(); ++i) os << (i ? "|" : "") << to_string(row.acm[i]);
  return os.str();
}

SweepSummary summarize(const std::vector<SweepRow>& rows) {
  SweepSummary s;
  s.rows = rows.size();
  for (const auto& row : rows) {
    ++s.per_status[row.status];
    if (row.regime) ++s.per_regime[*row.regime];
    for (const auto& contributors : row.contributors) {
      for (Theorem t : contributors) ++s.per_theorem[t];
    }
  }
  return s;
}

std::string render_summary_text(const SweepSummary& s) {
  std::ostringstream os;
  os << "rows written  " << s.rows << '\n';
  os << "status\n";
  for (const auto& [status, count] : s.per_status) os << "  " << status << "  " << count << '\n';
  os << "regime\n";
  for (Regime r : {Regime::NonstableStrong, Regime::Gap, Regime::StableStrong}) {
    auto it = s.per_regime.find(r);
    os << "  " << to_string(r) << "  " << (it == s.per_regime.end() ? 0 : it->second) << '\n';
  }
  os << "certificates per theorem\n";
  for (Theorem t : {Theorem::T4_3, Theorem::T4_5, Theorem::T4_7, Theorem::T5_2, Theorem::T5_4_1, Theorem::T5_4_3}) {
    auto it = s.per_theorem.find(t);
    os << "  " << to_string(t) << "  " << (it == s.per_theorem.end() ? 0 : it->second) << '\n';
  }
  return os.str();
}

ordered_json to_json(const SweepSummary& s) {
  ordered_json status = ordered_json::object();
  for (const auto& [k, v] : s.per_status) status[k] = v;
  ordered_json regimes = ordered_json::object();
  for (Regime r : {Regime::NonstableStrong, Regime::Gap, Regime::StableStrong}) {
    auto it = s.per_regime.find(r);
    regimes[std::string(to_string(r))] = it == s.per_regime.end() ? 0 : it->second;
  }
  ordered_json theorems = ordered_json::object();
  for (Theorem t : {Theorem::T4_3, Theorem::T4_5, Theorem::T4_7, Theorem::T5_2, Theorem::T5_4_1, Theorem::T5_4_3}) {
    auto it = s.per_theorem.find(t);
    theorems[std::string(to_string(t))] = it == s.per_theorem.end() ? 0 : it->second;
  }
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "sweep_summary";
  j["rows"] = s.rows;
  j["status"] = status;
  j["regime"] = regimes;
  j["theorem"] = theorems;
  return j;
}

}  // namespace nonvanish::cli
