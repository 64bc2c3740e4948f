#pragma once

// Text and structured (JSON) renderings of validation and analysis reports.
// Structured output carries schema_version; every exact quantity that is not
// an input integer (delta, theta, bounds, ...) is a "p/q" string.

#include <string>

#include <json.hpp>

#include "nonvanish/nonvanishing.hpp"
#include "nonvanish/threefold.hpp"

namespace nonvanish::cli {

inline constexpr int kSchemaVersion = 1;

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const Threefold& x);
ordered_json to_json(const BundleInvariants& b);
ordered_json to_json(const ValidationReport& v);
ordered_json to_json(const DerivedInvariants& di);
ordered_json to_json(const AnalysisReport& r);

/// Inverses of to_json. Throw PARSE_ERROR on schema mismatch.
Threefold threefold_from_json(const nlohmann::json& j);
BundleInvariants bundle_from_json(const nlohmann::json& j);
ValidationReport validation_from_json(const nlohmann::json& j);
DerivedInvariants derived_from_json(const nlohmann::json& j);
AnalysisReport report_from_json(const nlohmann::json& j);

/// Whole-document forms, newline terminated.
std::string render_structured(const AnalysisReport& r);
std::string render_text(const AnalysisReport& r);
std::string render_validation_text(const Threefold& x, const ValidationReport& v);
std::string render_validation_structured(const Threefold& x, const ValidationReport& v);

std::string threefold_line(const Threefold& x);  // "(d, epsilon, tau) = (2, -3, 8)"

}  // namespace nonvanish::cli
