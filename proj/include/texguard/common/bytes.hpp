#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace texguard {

// Half-open byte range [begin, end) into some source buffer.
struct ByteRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool empty() const { return end == begin; }
  bool contains(const ByteRange& other) const {
    return begin <= other.begin && other.end <= end;
  }
  std::string_view slice(std::string_view source) const {
    return source.substr(begin, end - begin);
  }
  auto operator<=>(const ByteRange&) const = default;
};

// Fraction of bytes that are printable ASCII or common whitespace. Empty input
// has ratio 0.
double printable_ratio(std::string_view bytes);

// Printable ASCII is kept, everything else becomes \xHH (backslash doubled).
std::string escape_bytes(std::string_view bytes, std::size_t limit = std::string::npos);

std::string to_hex(std::string_view bytes);
// Returns false on odd length or non-hex characters.
bool from_hex(std::string_view hex, std::string& out);

std::string_view trim(std::string_view text);
std::string_view trim_left(std::string_view text);

std::vector<std::string> split(std::string_view text, char separator);

// Whole-file helpers; throw std::runtime_error with the path on failure.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view bytes);

}  // namespace texguard
