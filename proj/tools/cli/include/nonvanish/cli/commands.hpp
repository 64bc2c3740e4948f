#pragma once

// Subcommands behind the nonvanish executable. Each takes an input path and
// output streams and returns the process exit code:
//   0 success, 1 input rejected (validation, precondition, grid cap),
//   2 parse / IO / usage, 3 internal integrality assertion.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "nonvanish/error.hpp"
#include "nonvanish/threefold.hpp"

namespace nonvanish::cli {

enum class Format { Text, Structured };

struct CliOptions {
  Format format = Format::Text;
  std::optional<VanishingMode> vanishing;
  std::optional<PicardMode> picard;
  std::optional<std::uint64_t> cap;  // sweep only; falls back to NONVANISH_CAP, then the default
  std::optional<std::string> out;
  unsigned jobs = 1;
};

int exit_code(ErrorCode code) noexcept;

int cmd_check(const std::string& path, const CliOptions& opts, std::ostream& out, std::ostream& err);
int cmd_analyze(const std::string& path, const CliOptions& opts, std::ostream& out, std::ostream& err);
int cmd_sweep(const std::string& path, const CliOptions& opts, std::ostream& out, std::ostream& err);
int cmd_pullback(const std::string& path, const CliOptions& opts, std::ostream& out, std::ostream& err);

/// Full command line, argv[0] included.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nonvanish::cli
