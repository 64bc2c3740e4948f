#include "nonvanish/cli/keyvalue.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "nonvanish/error.hpp"

namespace nonvanish::cli {

namespace {

[[noreturn]] void parse_fail(const std::string& source, int line, int column, const std::string& message) {
  std::ostringstream os;
  os << source << ":" << line << ":" << column << ": " << message;
  throw Error(ErrorCode::ParseError, os.str());
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool valid_identifier(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
  });
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

std::optional<std::int64_t> parse_int(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) return std::nullopt;
  if (value > kInputLimit || value < -kInputLimit) return std::nullopt;
  return value;
}

void KvSection::fail_at(std::string_view key, const std::string& message) const {
  const KvValue& v = get(key);
  parse_fail(source_, v.line, v.column, "[" + name_ + "] " + std::string(key) + ": " + message);
}

void KvSection::require_keys_within(std::initializer_list<std::string_view> allowed) const {
  for (const auto& [key, value] : values_) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      parse_fail(source_, value.line, 1, "unknown key '" + key + "' in section [" + name_ + "]");
    }
  }
}

const KvValue& KvSection::get(std::string_view key) const {
  auto it = values_.find(std::string(key));
  if (it == values_.end()) {
    parse_fail(source_, line_, 1, "section [" + name_ + "] is missing key '" + std::string(key) + "'");
  }
  return it->second;
}

std::int64_t KvSection::get_int(std::string_view key) const {
  auto v = parse_int(get(key).text);
  if (!v) fail_at(key, "expected an integer with magnitude <= 10^9, got '" + get(key).text + "'");
  return *v;
}

IntRange KvSection::get_range(std::string_view key) const {
  const std::string& text = get(key).text;
  const auto dots = text.find("..");
  IntRange r;
  if (dots == std::string::npos) {
    auto v = parse_int(text);
    if (!v) fail_at(key, "expected 'lo..hi' or an integer, got '" + text + "'");
    r.lo = r.hi = *v;
    return r;
  }
  auto lo = parse_int(std::string_view(text).substr(0, dots));
  auto hi = parse_int(std::string_view(text).substr(dots + 2));
  if (!lo || !hi) fail_at(key, "expected 'lo..hi' with integer bounds, got '" + text + "'");
  if (*lo > *hi) fail_at(key, "empty range '" + text + "'");
  r.lo = *lo;
  r.hi = *hi;
  return r;
}

std::vector<std::int64_t> KvSection::get_int_list(std::string_view key) const {
  const std::string& text = get(key).text;
  std::vector<std::int64_t> out;
  if (text == "none") return out;
  for (std::string_view part : split(text, ',')) {
    auto v = parse_int(part);
    if (!v) fail_at(key, "expected a comma-separated integer list or 'none', got '" + text + "'");
    out.push_back(*v);
  }
  return out;
}

std::map<std::int64_t, MapValue> KvSection::get_int_map(std::string_view key) const {
  std::string_view text = trim(get(key).text);
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
    fail_at(key, "expected an inline map '{n: value, ...}'");
  }
  text = trim(text.substr(1, text.size() - 2));
  std::map<std::int64_t, MapValue> out;
  if (text.empty()) return out;
  for (std::string_view item : split(text, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) fail_at(key, "map item '" + std::string(item) + "' lacks ':'");
    auto n = parse_int(item.substr(0, colon));
    std::string_view rhs = trim(item.substr(colon + 1));
    MapValue mv;
    if (rhs.substr(0, 2) == ">=") {
      mv.at_least = true;
      rhs.remove_prefix(2);
    }
    auto v = parse_int(rhs);
    if (!n || !v) fail_at(key, "map item '" + std::string(item) + "' is not 'integer: [>=]integer'");
    mv.value = *v;
    if (!out.emplace(*n, mv).second) fail_at(key, "duplicate map key " + std::to_string(*n));
  }
  return out;
}

std::string KvSection::get_word(std::string_view key) const {
  const std::string& text = get(key).text;
  if (!valid_identifier(text)) fail_at(key, "expected a single word, got '" + text + "'");
  return text;
}

KvDocument KvDocument::parse(std::string_view text, std::string source) {
  KvDocument doc;
  doc.source_ = std::move(source);
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view raw = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const auto first = raw.find_first_not_of(" \t");
    if (first == std::string_view::npos) continue;
    const int col = static_cast<int>(first) + 1;
    std::string_view body = trim(raw);

    if (body.front() == '[') {
      if (body.back() != ']') parse_fail(doc.source_, line_no, col, "unterminated section header");
      std::string_view name = trim(body.substr(1, body.size() - 2));
      if (!valid_identifier(name)) {
        parse_fail(doc.source_, line_no, col + 1, "invalid section name '" + std::string(name) + "'");
      }
      if (doc.find(name)) parse_fail(doc.source_, line_no, col, "duplicate section [" + std::string(name) + "]");
      doc.sections_.emplace_back(std::string(name), doc.source_, line_no);
      continue;
    }

    const auto eq = raw.find('=');
    if (eq == std::string_view::npos) parse_fail(doc.source_, line_no, col, "expected 'key = value'");
    std::string_view key = trim(raw.substr(0, eq));
    if (!valid_identifier(key)) parse_fail(doc.source_, line_no, col, "invalid key '" + std::string(key) + "'");
    if (doc.sections_.empty()) {
      parse_fail(doc.source_, line_no, col, "key '" + std::string(key) + "' appears before any [section]");
    }
    std::string_view after = raw.substr(eq + 1);
    const auto value_start = after.find_first_not_of(" \t");
    const int value_col = static_cast<int>(eq + 1 + (value_start == std::string_view::npos ? 0 : value_start)) + 1;
    std::string_view value = trim(after);
    if (value.empty()) parse_fail(doc.source_, line_no, value_col, "missing value for key '" + std::string(key) + "'");

    KvSection& section = doc.sections_.back();
    if (section.has(key)) {
      parse_fail(doc.source_, line_no, col, "duplicate key '" + std::string(key) + "' in [" + section.name() + "]");
    }
    section.values_.emplace(std::string(key), KvValue{std::string(value), line_no, value_col});
  }
  return doc;
}

KvDocument KvDocument::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path);
}

const KvSection* KvDocument::find(std::string_view name) const {
  for (const auto& s : sections_) {
    if (s.name() == name) return &s;
  }
  return nullptr;
}

const KvSection& KvDocument::require(std::string_view name) const {
  if (const KvSection* s = find(name)) return *s;
  parse_fail(source_, 1, 1, "missing section [" + std::string(name) + "]");
}

void KvDocument::require_sections_within(std::initializer_list<std::string_view> allowed) const {
  for (const auto& s : sections_) {
    if (std::find(allowed.begin(), allowed.end(), s.name()) == allowed.end()) {
      parse_fail(source_, s.line(), 1, "unexpected section [" + s.name() + "]");
    }
  }
}

}  // namespace nonvanish::cli
