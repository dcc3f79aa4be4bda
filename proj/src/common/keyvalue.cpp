#include "texguard/common/keyvalue.hpp"

#include "texguard/common/bytes.hpp"

namespace texguard {

std::vector<KeyValue> parse_key_values(std::string_view text) {
  std::vector<KeyValue> entries;
  std::size_t line_number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_number;
    const std::string_view line = trim(text.substr(start, end - start));
    start = end + 1;
    if (line.empty() || line.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_number) + ": expected key=value");
    }
    KeyValue entry;
    entry.key = std::string(trim(line.substr(0, eq)));
    entry.value = std::string(trim(line.substr(eq + 1)));
    entry.line = line_number;
    if (entry.key.empty()) {
      throw ConfigError("line " + std::to_string(line_number) + ": empty key");
    }
    entries.push_back(std::move(entry));
    if (end == text.size()) break;
  }
  return entries;
}

bool parse_bool(const KeyValue& entry) {
  if (entry.value == "true" || entry.value == "yes" || entry.value == "1") return true;
  if (entry.value == "false" || entry.value == "no" || entry.value == "0") return false;
  throw ConfigError("line " + std::to_string(entry.line) + ": " + entry.key +
                    " expects true|false, got '" + entry.value + "'");
}

}  // namespace texguard
