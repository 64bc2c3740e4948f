#pragma once

// Parameter-grid sweep. Grid order: threefold (ascending degree for a
// hypersurface range), then c1 in listed order, then c2, then alpha, both
// ascending. Rows come out in that order whatever the number of workers.
//
//   [sweep]      hypersurface_degree = lo..hi   (or a [threefold] section)
//                c1 = 0, -1
//                c2 = lo..hi
//                alpha = lo..hi
//                out = rows.csv                 (optional)

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nonvanish/bundle.hpp"
#include "nonvanish/cli/keyvalue.hpp"
#include "nonvanish/cli/report.hpp"
#include "nonvanish/nonvanishing.hpp"
#include "nonvanish/threefold.hpp"

namespace nonvanish::cli {

inline constexpr std::uint64_t kDefaultSweepCap = 1'000'000;

struct SweepSpec {
  std::vector<Threefold> threefolds;
  std::vector<std::int64_t> c1s;
  IntRange c2;
  IntRange alpha;
  std::optional<std::string> out;
};

/// [threefold] or [sweep].hypersurface_degree, never both.
SweepSpec parse_sweep_spec(const KvDocument& doc);

/// Number of grid points (exact, no overflow).
Integer grid_size(const SweepSpec& spec);

struct SweepRow {
  Threefold threefold;
  BundleInvariants bundle;
  std::string status;  // "ok", "rejected:<rule>|<rule>", or an error code name
  std::optional<Regime> regime;
  bool split = false;
  std::size_t certificate_count = 0;
  std::optional<std::int64_t> max_twist;
  std::vector<AcmObstructionKind> acm;
  std::vector<std::vector<Theorem>> contributors;  // per certificate, for the summary

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

/// One row from a finished analysis.
SweepRow row_from_report(const AnalysisReport& r);

/// Analyse one grid point. Validation failures and oversized twist ranges
/// become row statuses; integrality failures propagate.
SweepRow sweep_point(const Threefold& x, const BundleInvariants& b);

/// Throws GRID_TOO_LARGE before doing any work when grid_size > cap.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, std::uint64_t cap, unsigned jobs);

std::string csv_header();
std::string csv_row(const SweepRow& row);

struct SweepSummary {
  std::size_t rows = 0;
  std::map<std::string, std::size_t> per_status;
  std::map<Regime, std::size_t> per_regime;
  std::map<Theorem, std::size_t> per_theorem;  // certificates naming the theorem among contributors
};

SweepSummary summarize(const std::vector<SweepRow>& rows);
std::string render_summary_text(const SweepSummary& s);
ordered_json to_json(const SweepSummary& s);

}  // namespace nonvanish::cli
