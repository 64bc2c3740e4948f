#include "nonvanish/cli/commands.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "nonvanish/cli/inputs.hpp"
#include "nonvanish/cli/keyvalue.hpp"
#include "nonvanish/cli/report.hpp"
#include "nonvanish/cli/sweep.hpp"
#include "nonvanish/nonvanishing.hpp"
#include "nonvanish/pullback.hpp"

namespace nonvanish::cli {

namespace {

void apply_modes(Threefold& x, const CliOptions& opts) {
  if (opts.vanishing) x.vanishing_mode = *opts.vanishing;
  if (opts.picard) x.picard_mode = *opts.picard;
}

// Runs body, mapping library errors to exit codes with one line on err.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_code(e.code());
  }
}

// Writes text to --out when given, otherwise to out.
void emit(const std::string& text, const CliOptions& opts, std::ostream& out) {
  if (!opts.out) {
    out << text;
    return;
  }
  std::ofstream f(*opts.out, std::ios::binary);
  if (!f || !(f << text)) throw Error(ErrorCode::IoError, "cannot write '" + *opts.out + "'");
}

std::uint64_t resolve_cap(const CliOptions& opts) {
  if (opts.cap) return *opts.cap;
  if (const char* env = std::getenv("NONVANISH_CAP")) {
    auto v = parse_int(env);
    if (!v || *v < 1) throw Error(ErrorCode::ParseError, std::string("NONVANISH_CAP must be a positive integer, got '") +
                                                             env + "'");
    return static_cast<std::uint64_t>(*v);
  }
  return kDefaultSweepCap;
}

const Threefold kProjectiveSpace{1, -4, 6, PicardMode::PicZ, VanishingMode::FullC2};

std::string bundle_text(const BundleInvariants& b, const Integer& delta) {
  return "c1 = " + std::to_string(b.c1) + "  c2 = " + std::to_string(b.c2) + "  alpha = " + std::to_string(b.alpha) +
         "  delta = " + delta.get_str();
}

}  // namespace

int exit_code(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ValidationFailed:
    case ErrorCode::PreconditionViolated:
    case ErrorCode::GridTooLarge:
    case ErrorCode::WindowExceeded:
      return 1;
    case ErrorCode::ParseError:
    case ErrorCode::IoError:
      return 2;
    case ErrorCode::InternalNonInteger:
      return 3;
  }
  return 3;
}

int cmd_check(const std::string& path, const CliOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const AnalyzeInput in = parse_analyze_input(KvDocument::load(path));
    const ValidationReport v = validate(in.threefold);
    emit(opts.format == Format::Text ? render_validation_text(in.threefold, v)
                                     : render_validation_structured(in.threefold, v),
         opts, out);
    return v.ok ? 0 : 1;
  });
}

int cmd_analyze(const std::string& path, const CliOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const KvDocument doc = KvDocument::load(path);
    AnalyzeInput in = parse_analyze_input(doc);
    if (!doc.find("bundle")) doc.require("bundle");
    apply_modes(in.threefold, opts);

    const ValidationReport v = validate(in.threefold);
    if (!v.ok) {
      out << (opts.format == Format::Text ? render_validation_text(in.threefold, v)
                                          : render_validation_structured(in.threefold, v));
    }
    AnalysisConfig config;
    config.known = in.known;
    const AnalysisReport r = analyze(in.threefold, in.bundle, config);
    emit(opts.format == Format::Text ? render_text(r) : render_structured(r), opts, out);
    return 0;
  });
}

int cmd_sweep(const std::string& path, const CliOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    SweepSpec spec = parse_sweep_spec(KvDocument::load(path));
    for (auto& x : spec.threefolds) apply_modes(x, opts);
    const std::optional<std::string> sink = opts.out ? opts.out : spec.out;

    const std::vector<SweepRow> rows = run_sweep(spec, resolve_cap(opts), opts.jobs);

    std::ostringstream csv;
    csv << csv_header() << '\n';
    for (const auto& row : rows) csv << csv_row(row) << '\n';

    const SweepSummary summary = summarize(rows);
    const std::string summary_text =
        opts.format == Format::Text ? render_summary_text(summary) : to_json(summary).dump(2) + "\n";
    if (sink) {
      std::ofstream f(*sink, std::ios::binary);
      if (!f || !(f << csv.str())) throw Error(ErrorCode::IoError, "cannot write '" + *sink + "'");
      out << summary_text;
    } else {
      out << csv.str();
      err << summary_text;
    }
    return 0;
  });
}

int cmd_pullback(const std::string& path, const CliOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const PullbackInput in = parse_pullback_input(KvDocument::load(path));
    const BundleInvariants f = pullback_invariants(in.degree, in.source);
    Threefold x = hypersurface(in.degree);
    apply_modes(x, opts);
    const Integer delta_e = derive(kProjectiveSpace, in.source.invariants).delta;
    const AnalysisReport r = analyze(x, f);

    std::optional<std::int64_t> max_certified;
    if (!r.certificates.empty()) max_certified = r.certificates.back().n;
    auto certificate_at = [&](std::int64_t n) -> const MergedCertificate* {
      for (const auto& c : r.certificates) {
        if (c.n == n) return &c;
      }
      return nullptr;
    };

    struct TableRow {
      std::int64_t n;
      std::optional<H1Aggregate> h1;
      std::string error;
      const MergedCertificate* certificate;
      std::string note;
    };
    std::vector<TableRow> table;
    if (in.source.h1_table) {
      const H1Table& t = *in.source.h1_table;
      for (std::int64_t n = t.n_min(); n <= t.n_max(); ++n) {
        TableRow row{n, std::nullopt, "", certificate_at(n), ""};
        try {
          row.h1 = aggregate_h1(in.degree, in.source, n);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::WindowExceeded) throw;
          row.error = e.what();
        }
        if (row.h1 && row.h1->value > 0 && !row.certificate) {
          row.note = max_certified && n > *max_certified ? "beyond certified range" : "not certified";
        }
        table.push_back(std::move(row));
      }
    }

    std::ostringstream os;
    if (opts.format == Format::Text) {
      os << "pullback      degree " << in.degree << " hypersurface " << threefold_line(x) << '\n';
      os << "E on P3       " << bundle_text(in.source.invariants, delta_e) << '\n';
      os << "F             " << bundle_text(f, r.derived.delta) << '\n';
      os << render_text(r);
      if (in.source.h1_table) {
        os << "h1 table      window [" << in.source.h1_table->n_min() << ", " << in.source.h1_table->n_max()
           << "] on P3\n";
        for (const auto& row : table) {
          os << "  n = " << row.n << "  ";
          if (row.h1) {
            os << "h1(F) " << (row.h1->exact ? "= " : ">= ") << row.h1->value;
          } else {
            os << row.error;
          }
          if (row.certificate) {
            os << "  certificate h1 >= " << row.certificate->lower_bound.str() << " "
               << to_string(row.certificate->theorem);
          }
          if (!row.note.empty()) os << "  " << row.note;
          os << '\n';
        }
      }
    } else {
      ordered_json j;
      j["schema_version"] = kSchemaVersion;
      j["kind"] = "pullback";
      j["degree"] = in.degree;
      j["source"] = to_json(in.source.invariants);
      j["source_delta"] = delta_e.get_str();
      j["pullback"] = to_json(f);
      j["analysis"] = to_json(r);
      if (in.source.h1_table) {
        ordered_json rows = ordered_json::array();
        for (const auto& row : table) {
          ordered_json jr;
          jr["n"] = row.n;
          jr["h1"] = row.h1 ? ordered_json{{"value", row.h1->value}, {"exact", row.h1->exact}} : ordered_json(nullptr);
          jr["error"] = row.error.empty() ? ordered_json(nullptr) : ordered_json(row.error);
          jr["certificate"] = row.certificate ? ordered_json{{"lower_bound", row.certificate->lower_bound.str()},
                                                              {"theorem", to_string(row.certificate->theorem)}}
                                              : ordered_json(nullptr);
          jr["note"] = row.note.empty() ? ordered_json(nullptr) : ordered_json(row.note);
          rows.push_back(std::move(jr));
        }
        j["table"] = {{"window", {in.source.h1_table->n_min(), in.source.h1_table->n_max()}}, {"rows", rows}};
      } else {
        j["table"] = nullptr;
      }
      os << j.dump(2) << '\n';
    }
    emit(os.str(), opts, out);
    return 0;
  });
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Non-vanishing certificates for h1 of rank-2 bundles on threefolds"};
  app.require_subcommand(1);
  app.fallthrough();

  CliOptions opts;
  std::string format = "text";
  std::string vanishing;
  std::string picard;
  std::uint64_t cap = 0;
  std::string out_path;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--vanishing-mode", vanishing, "Override the vanishing assumption")
      ->check(CLI::IsMember({"c2", "c4"}));
  app.add_option("--picard", picard, "Override the Picard mode")->check(CLI::IsMember({"z", "num-z"}));
  auto* cap_opt = app.add_option("--cap", cap, "Sweep grid cap (default: NONVANISH_CAP or 10^6)")
                      ->check(CLI::PositiveNumber);
  app.add_option("--out", out_path, "Write the report (sweep: the rows) to this path");
  app.add_option("--jobs", jobs, "Sweep worker threads")->check(CLI::Range(1u, 1024u));

  std::string input;
  using Command = int (*)(const std::string&, const CliOptions&, std::ostream&, std::ostream&);
  Command command = nullptr;
  const std::pair<const char*, Command> subcommands[] = {
      {"check", cmd_check}, {"analyze", cmd_analyze}, {"sweep", cmd_sweep}, {"pullback", cmd_pullback}};
  const char* descriptions[] = {"Validate the threefold invariants", "Certify non-vanishing twists",
                                "Analyse a parameter grid", "Pull a P3 bundle back to a hypersurface"};
  for (std::size_t i = 0; i < 4; ++i) {
    auto* sub = app.add_subcommand(subcommands[i].first, descriptions[i]);
    sub->add_option("input", input, "Key-value input file")->required();
    sub->callback([&command, fn = subcommands[i].second] { command = fn; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  opts.format = format == "structured" ? Format::Structured : Format::Text;
  if (!vanishing.empty()) opts.vanishing = vanishing_from_word(vanishing);
  if (!picard.empty()) opts.picard = picard_from_word(picard);
  if (cap_opt->count() > 0) opts.cap = cap;
  if (!out_path.empty()) opts.out = out_path;
  opts.jobs = jobs;
  return command(input, opts, out, err);
}

}  // namespace nonvanish::cli
