#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace texguard {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct KeyValue {
  std::string key;
  std::string value;
  std::size_t line = 0;
};

// Flat `key=value` text: one pair per line, `#` starts a comment line, blank
// lines ignored, whitespace around key and value trimmed. Keys may contain
// spaces (`observed.User and group names=obtained`).
std::vector<KeyValue> parse_key_values(std::string_view text);

bool parse_bool(const KeyValue& entry);

}  // namespace texguard
