#include "texguard/tex/arguments.hpp"

namespace texguard::tex {

namespace {

bool is_blank(unsigned char c) { return c == ' ' || c == '\t' || c == '\f' || c == '\v'; }

bool is_blank_text(const Token& token) {
  if (token.kind != TokenKind::Text) return false;
  for (unsigned char c : token.value) {
    if (!is_blank(c)) return false;
  }
  return true;
}

bool is_ignorable(const Token& token) {
  return token.kind == TokenKind::Comment || token.kind == TokenKind::Newline ||
         is_blank_text(token);
}

bool is_letter(unsigned char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); }

// Position inside the token list with a byte offset into a Text token.
struct Cursor {
  std::size_t index = 0;
  std::size_t offset = 0;  // only meaningful for Text tokens
};

// Moves the cursor past blanks within the current text token and past
// ignorable tokens that follow it.
void skip_blanks(const TokenStream& stream, Cursor& cursor) {
  const auto& tokens = stream.tokens;
  while (cursor.index < tokens.size()) {
    const Token& token = tokens[cursor.index];
    if (token.kind == TokenKind::Text) {
      while (cursor.offset < token.value.size() &&
             is_blank(static_cast<unsigned char>(token.value[cursor.offset]))) {
        ++cursor.offset;
      }
      if (cursor.offset < token.value.size()) return;
    } else if (!is_ignorable(token)) {
      return;
    }
    ++cursor.index;
    cursor.offset = 0;
  }
}

}  // namespace

std::size_t next_significant(const TokenStream& stream, std::size_t from) {
  const auto& tokens = stream.tokens;
  while (from < tokens.size() && is_ignorable(tokens[from])) ++from;
  return from;
}

std::size_t previous_significant(const TokenStream& stream, std::size_t before) {
  while (before > 0) {
    --before;
    if (!is_ignorable(stream.tokens[before])) return before;
  }
  return static_cast<std::size_t>(-1);
}

GroupArgument read_group(const TokenStream& stream, std::size_t open, std::size_t source_size) {
  const auto& tokens = stream.tokens;
  GroupArgument group;
  const std::size_t begin = tokens[open].span.begin;
  int depth = 0;
  for (std::size_t i = open; i < tokens.size(); ++i) {
    if (tokens[i].kind == TokenKind::BeginGroup) {
      ++depth;
    } else if (tokens[i].kind == TokenKind::EndGroup) {
      if (--depth == 0) {
        group.inner = ByteRange{tokens[open].span.end, tokens[i].span.begin};
        group.outer = ByteRange{begin, tokens[i].span.end};
        group.next = i + 1;
        group.closed = true;
        return group;
      }
    }
  }
  group.inner = ByteRange{tokens[open].span.end, source_size};
  group.outer = ByteRange{begin, source_size};
  group.next = tokens.size();
  return group;
}

std::optional<FileArgument> read_file_argument(const TokenStream& stream, std::string_view source,
                                               std::size_t command, FileSyntax syntax) {
  const auto& tokens = stream.tokens;
  Cursor cursor{command + 1, 0};
  skip_blanks(stream, cursor);
  if (cursor.index >= tokens.size()) return std::nullopt;
  const std::size_t first_byte = tokens[cursor.index].span.begin + cursor.offset;

  if (syntax == FileSyntax::Options) {
    const Token& token = tokens[cursor.index];
    if (token.kind == TokenKind::Text && token.value[cursor.offset] == '[') {
      // Skip to the byte after the closing bracket.
      bool found = false;
      while (cursor.index < tokens.size() && !found) {
        const Token& t = tokens[cursor.index];
        if (t.kind == TokenKind::Text) {
          const std::size_t close = t.value.find(']', cursor.offset);
          if (close != std::string::npos) {
            cursor.offset = close + 1;
            found = true;
            break;
          }
        }
        ++cursor.index;
        cursor.offset = 0;
      }
      if (!found) return std::nullopt;
      skip_blanks(stream, cursor);
      if (cursor.index >= tokens.size()) return std::nullopt;
    }
  }

  if (syntax == FileSyntax::StreamOpen) {
    const Token& designator = tokens[cursor.index];
    if (designator.kind == TokenKind::ControlWord) {
      ++cursor.index;
      cursor.offset = 0;
    } else if (designator.kind == TokenKind::ControlSymbol) {
      // `\@inputcheck` lexes as `\@` followed by letters in a text run.
      ++cursor.index;
      cursor.offset = 0;
      if (cursor.index < tokens.size() && tokens[cursor.index].kind == TokenKind::Text &&
          tokens[cursor.index].span.begin == designator.span.end) {
        const std::string& run = tokens[cursor.index].value;
        while (cursor.offset < run.size() &&
               is_letter(static_cast<unsigned char>(run[cursor.offset]))) {
          ++cursor.offset;
        }
      }
    } else if (designator.kind == TokenKind::Text) {
      const std::string& run = designator.value;
      if (cursor.offset < run.size() && run[cursor.offset] == '-') ++cursor.offset;
      while (cursor.offset < run.size() && run[cursor.offset] >= '0' && run[cursor.offset] <= '9') {
        ++cursor.offset;
      }
    } else {
      return std::nullopt;
    }
    skip_blanks(stream, cursor);
    if (cursor.index < tokens.size() && tokens[cursor.index].kind == TokenKind::Text &&
        tokens[cursor.index].value[cursor.offset] == '=') {
      ++cursor.offset;
      skip_blanks(stream, cursor);
    }
    if (cursor.index >= tokens.size()) return std::nullopt;
  }

  const Token& token = tokens[cursor.index];
  if (token.kind == TokenKind::BeginGroup) {
    const GroupArgument group = read_group(stream, cursor.index, source.size());
    for (std::size_t i = cursor.index + 1; i + 1 < group.next; ++i) {
      if (tokens[i].kind != TokenKind::Text) return std::nullopt;
    }
    std::string_view inner = group.inner.slice(source);
    const std::size_t lead = inner.size() - trim_left(inner).size();
    const std::string_view name = trim(inner);
    if (name.empty()) return std::nullopt;
    FileArgument arg;
    arg.name = std::string(name);
    arg.span = ByteRange{group.inner.begin + lead, group.inner.begin + lead + name.size()};
    arg.extent = ByteRange{first_byte, group.outer.end};
    arg.next = group.next;
    return arg;
  }
  if (token.kind == TokenKind::Text) {
    const std::string& run = token.value;
    std::size_t end = cursor.offset;
    while (end < run.size() && !is_blank(static_cast<unsigned char>(run[end]))) ++end;
    if (end == cursor.offset) return std::nullopt;
    FileArgument arg;
    arg.name = run.substr(cursor.offset, end - cursor.offset);
    arg.span = ByteRange{token.span.begin + cursor.offset, token.span.begin + end};
    arg.extent = ByteRange{first_byte, arg.span.end};
    arg.next = cursor.index + 1;
    return arg;
  }
  return std::nullopt;
}

}  // namespace texguard::tex
