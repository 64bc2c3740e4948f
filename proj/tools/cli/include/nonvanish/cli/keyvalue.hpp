#pragma once

// Flat sectioned key-value text:
//
//   # comment
//   [bundle]
//   c1 = 0
//   c2 = 4
//   alpha = 1
//
// Value shapes understood by the typed getters: integers, ranges "lo..hi",
// comma lists "0, -1", and inline maps "{n: v, ...}" whose values may carry a
// ">=" prefix. All errors are PARSE_ERROR with source:line:column.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nonvanish::cli {

/// Largest magnitude accepted for any integer input.
inline constexpr std::int64_t kInputLimit = 1'000'000'000;

struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  std::uint64_t size() const { return static_cast<std::uint64_t>(hi - lo) + 1; }
};

struct MapValue {
  std::int64_t value = 0;
  bool at_least = false;  // written ">=value"
};

struct KvValue {
  std::string text;
  int line = 0;
  int column = 0;
};

class KvSection {
 public:
  KvSection(std::string name, std::string source, int line) : name_(std::move(name)), source_(std::move(source)), line_(line) {}

  const std::string& name() const { return name_; }
  int line() const { return line_; }
  bool has(std::string_view key) const { return values_.count(std::string(key)) != 0; }
  const std::map<std::string, KvValue>& values() const { return values_; }

  /// Throws unless every key is in allowed.
  void require_keys_within(std::initializer_list<std::string_view> allowed) const;

  const KvValue& get(std::string_view key) const;
  std::int64_t get_int(std::string_view key) const;
  IntRange get_range(std::string_view key) const;
  std::vector<std::int64_t> get_int_list(std::string_view key) const;
  std::map<std::int64_t, MapValue> get_int_map(std::string_view key) const;
  std::string get_word(std::string_view key) const;

  /// PARSE_ERROR pointing at the value of key.
  [[noreturn]] void fail_at(std::string_view key, const std::string& message) const;

 private:
  friend class KvDocument;
  std::string name_;
  std::string source_;
  int line_;
  std::map<std::string, KvValue> values_;
};

class KvDocument {
 public:
  static KvDocument parse(std::string_view text, std::string source = "<input>");
  static KvDocument load(const std::string& path);

  const std::string& source() const { return source_; }
  const KvSection* find(std::string_view name) const;
  const KvSection& require(std::string_view name) const;
  const std::vector<KvSection>& sections() const { return sections_; }

  /// Throws unless every section name is in allowed.
  void require_sections_within(std::initializer_list<std::string_view> allowed) const;

 private:
  std::string source_;
  std::vector<KvSection> sections_;
};

/// Strict integer in [-kInputLimit, kInputLimit]; nullopt otherwise.
std::optional<std::int64_t> parse_int(std::string_view text);

}  // namespace nonvanish::cli
