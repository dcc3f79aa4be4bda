#include "texguard/tex/lexer.hpp"

#include <array>

namespace texguard::tex {

namespace {

bool is_letter(unsigned char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); }

bool is_line_end(unsigned char c) { return c == '\n' || c == '\r'; }

// Bytes that terminate a Text run.
bool is_special(unsigned char c) {
  switch (c) {
    case '\\':
    case '{':
    case '}':
    case '%':
    case '$':
    case '\n':
    case '\r':
      return true;
    default:
      return false;
  }
}

bool is_digit(unsigned char c) { return c >= '0' && c <= '9'; }

// Length of the line terminator starting at `pos` (CRLF counts as one).
std::size_t line_end_length(std::string_view source, std::size_t pos) {
  if (source[pos] == '\r' && pos + 1 < source.size() && source[pos + 1] == '\n') return 2;
  return 1;
}

}  // namespace

std::string_view token_kind_name(TokenKind kind) {
  static constexpr std::array<std::string_view, 9> kNames = {
      "CONTROL_WORD", "CONTROL_SYMBOL", "BEGIN_GROUP", "END_GROUP", "COMMENT",
      "PARAMETER",    "TEXT",           "MATH_SHIFT",  "NEWLINE",
  };
  return kNames[static_cast<std::size_t>(kind)];
}

TokenStream tokenize(std::string_view source, std::string source_id) {
  TokenStream stream;
  stream.source_id = std::move(source_id);
  auto& tokens = stream.tokens;

  auto emit = [&](TokenKind kind, std::size_t begin, std::size_t end, std::string value) {
    tokens.push_back(Token{kind, ByteRange{begin, end}, std::move(value)});
  };

  const std::size_t n = source.size();
  std::size_t pos = 0;
  while (pos < n) {
    const auto c = static_cast<unsigned char>(source[pos]);
    const std::size_t start = pos;

    if (c == '\\') {
      if (pos + 1 >= n) {
        // Lone trailing escape has nothing to name.
        emit(TokenKind::Text, start, n, "\\");
        pos = n;
        continue;
      }
      const auto next = static_cast<unsigned char>(source[pos + 1]);
      if (is_letter(next)) {
        std::size_t end = pos + 1;
        while (end < n && is_letter(static_cast<unsigned char>(source[end]))) ++end;
        std::string name(source.substr(pos + 1, end - pos - 1));
        if (name == "catcode") stream.catcode_overrides_seen.push_back(ByteRange{start, end});
        emit(TokenKind::ControlWord, start, end, std::move(name));
        pos = end;
      } else if (is_line_end(next)) {
        const std::size_t end = pos + 1 + line_end_length(source, pos + 1);
        emit(TokenKind::ControlSymbol, start, end, "\n");
        pos = end;
      } else {
        emit(TokenKind::ControlSymbol, start, pos + 2, std::string(1, static_cast<char>(next)));
        pos += 2;
      }
      continue;
    }

    switch (c) {
      case '{':
        emit(TokenKind::BeginGroup, start, pos + 1, {});
        ++pos;
        continue;
      case '}':
        emit(TokenKind::EndGroup, start, pos + 1, {});
        ++pos;
        continue;
      case '$':
        emit(TokenKind::MathShift, start, pos + 1, {});
        ++pos;
        continue;
      case '\n':
      case '\r': {
        const std::size_t end = pos + line_end_length(source, pos);
        emit(TokenKind::Newline, start, end, {});
        pos = end;
        continue;
      }
      case '%': {
        std::size_t end = pos + 1;
        while (end < n && !is_line_end(static_cast<unsigned char>(source[end]))) ++end;
        emit(TokenKind::Comment, start, end, std::string(source.substr(pos + 1, end - pos - 1)));
        pos = end;
        continue;
      }
      default:
        break;
    }

    if (c == '#' && pos + 1 < n && is_digit(static_cast<unsigned char>(source[pos + 1]))) {
      emit(TokenKind::Parameter, start, pos + 2, std::string(1, source[pos + 1]));
      pos += 2;
      continue;
    }

    // Text run; a '#' that does not introduce a parameter stays in the run.
    std::size_t end = pos + 1;
    while (end < n) {
      const auto b = static_cast<unsigned char>(source[end]);
      if (is_special(b)) break;
      if (b == '#' && end + 1 < n && is_digit(static_cast<unsigned char>(source[end + 1]))) break;
      ++end;
    }
    emit(TokenKind::Text, start, end, std::string(source.substr(start, end - start)));
    pos = end;
  }
  return stream;
}

std::string dump_tokens(const TokenStream& stream, std::string_view source) {
  std::string out;
  for (const auto& token : stream.tokens) {
    out += token_kind_name(token.kind);
    out += ' ';
    out += std::to_string(token.span.begin);
    out += "..";
    out += std::to_string(token.span.end);
    out += " \"";
    for (char c : escape_bytes(token.span.slice(source))) {
      if (c == '"') out += '\\';
      out += c;
    }
    out += "\"\n";
  }
  return out;
}

}  // namespace texguard::tex
