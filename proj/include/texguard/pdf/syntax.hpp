#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "texguard/pdf/object.hpp"

namespace texguard::pdf {

bool is_pdf_space(char c);
bool is_pdf_delimiter(char c);

inline constexpr int kMaxNesting = 512;

// Recursive-descent reader for PDF object syntax over a byte buffer. Errors
// leave `error` set and return nullopt; nothing throws.
class SyntaxReader {
 public:
  explicit SyntaxReader(std::string_view data, std::size_t pos = 0) : data_(data), pos_(pos) {}

  std::size_t pos() const { return pos_; }
  void seek(std::size_t pos) { pos_ = pos; }
  bool at_end() const { return pos_ >= data_.size(); }
  const std::string& error() const { return error_; }

  // Whitespace and comments.
  void skip_space();
  // True and advances when the next token is exactly `keyword`.
  bool keyword(std::string_view keyword);
  std::optional<std::int64_t> integer();
  std::optional<Value> value();

 private:
  std::optional<Value> value(int depth);
  std::optional<Value> number();
  std::optional<Value> name();
  std::optional<Value> literal_string();
  std::optional<Value> hex_string();
  std::optional<Value> array(int depth);
  std::optional<Value> dict(int depth);
  bool fail(std::string message);

  std::string_view data_;
  std::size_t pos_;
  std::string error_;
};

struct ParsedObject {
  ObjectId id;
  Value body;
  ByteRange span;  // `N G obj` through `endobj` (or the end of the body)
  std::vector<std::string> warnings;
};

// Resolves an indirect /Length. Returning nullopt falls back to scanning for
// `endstream`.
using LengthResolver = std::function<std::optional<std::int64_t>(ObjectId)>;

// Parses `N G obj ... endobj` starting at `offset` (leading whitespace allowed).
std::optional<ParsedObject> parse_indirect_object(std::string_view data, std::size_t offset,
                                                  const LengthResolver& resolve_length = {},
                                                  std::string* error = nullptr);

// Finds `keyword` as a whole token at or after `from`.
std::size_t find_keyword(std::string_view data, std::string_view keyword, std::size_t from = 0);

}  // namespace texguard::pdf
