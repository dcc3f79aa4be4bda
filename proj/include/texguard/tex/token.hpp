#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "texguard/common/bytes.hpp"

namespace texguard::tex {

enum class TokenKind : std::uint8_t {
  ControlWord,    // \name, letters only
  ControlSymbol,  // \ followed by one non-letter byte
  BeginGroup,
  EndGroup,
  Comment,        // text after % up to, not including, the line end
  Parameter,      // #1 .. #9
  Text,           // run of ordinary bytes, never contains a line end
  MathShift,
  Newline,        // LF, CR or CRLF
};

std::string_view token_kind_name(TokenKind kind);

struct Token {
  TokenKind kind;
  ByteRange span;
  // ControlWord: name; ControlSymbol: the symbol ("\n" for an escaped line
  // end); Comment: text; Parameter: digit; Text: the run. Empty otherwise.
  std::string value;

  bool is_word(std::string_view name) const {
    return kind == TokenKind::ControlWord && value == name;
  }
  bool operator==(const Token&) const = default;
};

struct TokenStream {
  std::vector<Token> tokens;
  std::string source_id;
  std::vector<ByteRange> catcode_overrides_seen;
};

}  // namespace texguard::tex
