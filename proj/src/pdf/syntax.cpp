#include "texguard/pdf/syntax.hpp"

#include <cerrno>
#include <cstdlib>
#include <limits>

namespace texguard::pdf {

bool is_pdf_space(char c) {
  return c == ' ' || c == '\n' || c == '\r' || c == '\t' || c == '\f' || c == '\0';
}

bool is_pdf_delimiter(char c) {
  switch (c) {
    case '(': case ')': case '<': case '>': case '[': case ']':
    case '{': case '}': case '/': case '%':
      return true;
    default:
      return false;
  }
}

namespace {

bool is_boundary(std::string_view data, std::size_t pos) {
  return pos >= data.size() || is_pdf_space(data[pos]) || is_pdf_delimiter(data[pos]);
}

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::size_t find_keyword(std::string_view data, std::string_view keyword, std::size_t from) {
  while (from <= data.size()) {
    const std::size_t hit = data.find(keyword, from);
    if (hit == std::string_view::npos) return hit;
    const bool left_ok = hit == 0 || is_pdf_space(data[hit - 1]) || is_pdf_delimiter(data[hit - 1]);
    if (left_ok && is_boundary(data, hit + keyword.size())) return hit;
    from = hit + 1;
  }
  return std::string_view::npos;
}

bool SyntaxReader::fail(std::string message) {
  if (error_.empty()) error_ = std::move(message) + " at offset " + std::to_string(pos_);
  return false;
}

void SyntaxReader::skip_space() {
  while (pos_ < data_.size()) {
    const char c = data_[pos_];
    if (is_pdf_space(c)) {
      ++pos_;
    } else if (c == '%') {
      while (pos_ < data_.size() && data_[pos_] != '\n' && data_[pos_] != '\r') ++pos_;
    } else {
      break;
    }
  }
}

bool SyntaxReader::keyword(std::string_view word) {
  skip_space();
  if (data_.substr(pos_, word.size()) != word) return false;
  if (!is_boundary(data_, pos_ + word.size())) return false;
  pos_ += word.size();
  return true;
}

std::optional<std::int64_t> SyntaxReader::integer() {
  skip_space();
  std::size_t p = pos_;
  bool negative = false;
  if (p < data_.size() && (data_[p] == '+' || data_[p] == '-')) negative = data_[p++] == '-';
  const std::size_t digits = p;
  std::int64_t value = 0;
  while (p < data_.size() && data_[p] >= '0' && data_[p] <= '9') {
    if (value > (std::numeric_limits<std::int64_t>::max() - 9) / 10) return std::nullopt;
    value = value * 10 + (data_[p] - '0');
    ++p;
  }
  if (p == digits || !is_boundary(data_, p) || (p < data_.size() && data_[p] == '.')) {
    return std::nullopt;
  }
  pos_ = p;
  return negative ? -value : value;
}

std::optional<Value> SyntaxReader::value() { return value(0); }

std::optional<Value> SyntaxReader::value(int depth) {
  if (depth > kMaxNesting) {
    fail("nesting too deep");
    return std::nullopt;
  }
  skip_space();
  if (pos_ >= data_.size()) {
    fail("unexpected end of data");
    return std::nullopt;
  }
  const char c = data_[pos_];
  switch (c) {
    case '/': return name();
    case '(': return literal_string();
    case '[': return array(depth);
    case '<':
      if (pos_ + 1 < data_.size() && data_[pos_ + 1] == '<') return dict(depth);
      return hex_string();
    default:
      break;
  }
  if ((c >= '0' && c <= '9') || c == '+' || c == '-' || c == '.') {
    // `N G R` is a reference; anything else is a plain number.
    const std::size_t start = pos_;
    if (auto number_part = integer(); number_part && *number_part >= 0) {
      const std::size_t after_number = pos_;
      if (auto gen = integer(); gen && *gen >= 0 && *gen <= 65535) {
        if (keyword("R") && *number_part <= std::numeric_limits<std::uint32_t>::max()) {
          return Value(Reference{ObjectId{static_cast<std::uint32_t>(*number_part),
                                          static_cast<std::uint16_t>(*gen)}});
        }
      }
      pos_ = after_number;
      return Value(*number_part);
    }
    pos_ = start;
    return number();
  }
  if (keyword("true")) return Value(true);
  if (keyword("false")) return Value(false);
  if (keyword("null")) return Value(Null{});
  fail("unexpected token");
  return std::nullopt;
}

std::optional<Value> SyntaxReader::number() {
  std::size_t p = pos_;
  if (p < data_.size() && (data_[p] == '+' || data_[p] == '-')) ++p;
  bool digits = false;
  bool dot = false;
  while (p < data_.size()) {
    const char c = data_[p];
    if (c >= '0' && c <= '9') {
      digits = true;
    } else if (c == '.' && !dot) {
      dot = true;
    } else {
      break;
    }
    ++p;
  }
  if (!digits || !is_boundary(data_, p)) {
    fail("malformed number");
    return std::nullopt;
  }
  const std::string text(data_.substr(pos_, p - pos_));
  pos_ = p;
  if (!dot) {
    errno = 0;
    const long long v = std::strtoll(text.c_str(), nullptr, 10);
    if (errno != ERANGE) return Value(static_cast<std::int64_t>(v));
  }
  return Value(std::strtod(text.c_str(), nullptr));
}

std::optional<Value> SyntaxReader::name() {
  ++pos_;  // slash
  std::string out;
  while (pos_ < data_.size() && !is_pdf_space(data_[pos_]) && !is_pdf_delimiter(data_[pos_])) {
    const char c = data_[pos_];
    if (c == '#' && pos_ + 2 < data_.size() + 0 && hex_digit(data_[pos_ + 1]) >= 0 &&
        pos_ + 2 < data_.size() && hex_digit(data_[pos_ + 2]) >= 0) {
      out += static_cast<char>(hex_digit(data_[pos_ + 1]) * 16 + hex_digit(data_[pos_ + 2]));
      pos_ += 3;
    } else {
      out += c;
      ++pos_;
    }
  }
  return Value(Name{std::move(out)});
}

std::optional<Value> SyntaxReader::literal_string() {
  ++pos_;  // (
  std::string out;
  int depth = 1;
  while (pos_ < data_.size()) {
    const char c = data_[pos_++];
    if (c == '\\') {
      if (pos_ >= data_.size()) break;
      const char e = data_[pos_++];
      switch (e) {
        case 'n': out += '\n'; break;
        case 'r': out += '\r'; break;
        case 't': out += '\t'; break;
        case 'b': out += '\b'; break;
        case 'f': out += '\f'; break;
        case '\r':
          if (pos_ < data_.size() && data_[pos_] == '\n') ++pos_;
          break;
        case '\n':
          break;
        default:
          if (e >= '0' && e <= '7') {
            int v = e - '0';
            for (int k = 0; k < 2 && pos_ < data_.size() && data_[pos_] >= '0' && data_[pos_] <= '7';
                 ++k) {
              v = v * 8 + (data_[pos_++] - '0');
            }
            out += static_cast<char>(v & 0xff);
          } else {
            out += e;  // covers \( \) \\ and unknown escapes
          }
      }
    } else if (c == '(') {
      ++depth;
      out += c;
    } else if (c == ')') {
      if (--depth == 0) return Value(String{std::move(out), false});
      out += c;
    } else if (c == '\r') {
      // Unescaped end-of-line markers read as a single line feed.
      if (pos_ < data_.size() && data_[pos_] == '\n') ++pos_;
      out += '\n';
    } else {
      out += c;
    }
  }
  fail("unterminated string");
  return std::nullopt;
}

std::optional<Value> SyntaxReader::hex_string() {
  ++pos_;  // <
  std::string out;
  int high = -1;
  while (pos_ < data_.size()) {
    const char c = data_[pos_++];
    if (c == '>') {
      if (high >= 0) out += static_cast<char>(high << 4);
      return Value(String{std::move(out), true});
    }
    if (is_pdf_space(c)) continue;
    const int d = hex_digit(c);
    if (d < 0) {
      fail("bad hex string");
      return std::nullopt;
    }
    if (high < 0) {
      high = d;
    } else {
      out += static_cast<char>((high << 4) | d);
      high = -1;
    }
  }
  fail("unterminated hex string");
  return std::nullopt;
}

std::optional<Value> SyntaxReader::array(int depth) {
  ++pos_;  // [
  Array out;
  while (true) {
    skip_space();
    if (pos_ >= data_.size()) {
      fail("unterminated array");
      return std::nullopt;
    }
    if (data_[pos_] == ']') {
      ++pos_;
      return Value(std::move(out));
    }
    auto item = value(depth + 1);
    if (!item) return std::nullopt;
    out.push_back(std::move(*item));
  }
}

std::optional<Value> SyntaxReader::dict(int depth) {
  pos_ += 2;  // <<
  Dict out;
  while (true) {
    skip_space();
    if (pos_ >= data_.size()) {
      fail("unterminated dictionary");
      return std::nullopt;
    }
    if (data_[pos_] == '>' && pos_ + 1 < data_.size() && data_[pos_ + 1] == '>') {
      pos_ += 2;
      return Value(std::move(out));
    }
    if (data_[pos_] != '/') {
      fail("dictionary key is not a name");
      return std::nullopt;
    }
    auto key = name();
    auto item = value(depth + 1);
    if (!item) return std::nullopt;
    out.set(std::string(*key->as_name()), std::move(*item));
  }
}

std::optional<ParsedObject> parse_indirect_object(std::string_view data, std::size_t offset,
                                                  const LengthResolver& resolve_length,
                                                  std::string* error) {
  auto failed = [&](const std::string& message) -> std::optional<ParsedObject> {
    if (error) *error = message;
    return std::nullopt;
  };
  if (offset >= data.size()) return failed("offset beyond end of file");
  SyntaxReader reader(data, offset);
  reader.skip_space();
  const std::size_t begin = reader.pos();
  const auto number = reader.integer();
  const auto generation = reader.integer();
  if (!number || !generation || *number < 0 || *generation < 0 || *generation > 65535 ||
      *number > std::numeric_limits<std::uint32_t>::max() || !reader.keyword("obj")) {
    return failed("no object header at offset " + std::to_string(offset));
  }
  ParsedObject result;
  result.id = ObjectId{static_cast<std::uint32_t>(*number), static_cast<std::uint16_t>(*generation)};

  // An empty body (`N G obj endobj`) is a null object.
  const std::size_t body_start = reader.pos();
  if (reader.keyword("endobj")) {
    result.body = Value(Null{});
    result.span = ByteRange{begin, reader.pos()};
    return result;
  }
  reader.seek(body_start);
  auto body = reader.value();
  if (!body) return failed(reader.error());

  const std::size_t after_body = reader.pos();
  if (body->as_dict() && reader.keyword("stream")) {
    std::size_t p = reader.pos();
    if (p < data.size() && data[p] == '\r') {
      ++p;
      if (p < data.size() && data[p] == '\n') ++p;
    } else if (p < data.size() && data[p] == '\n') {
      ++p;
    }
    Stream stream;
    stream.dict = std::move(*body->as_dict());
    std::optional<std::int64_t> length;
    if (const Value* len = stream.dict.get("Length")) {
      if (auto direct = len->as_int()) {
        length = direct;
      } else if (const auto* ref = len->as_reference(); ref && resolve_length) {
        length = resolve_length(ref->id);
      }
    }
    std::size_t data_end = std::string_view::npos;
    std::size_t after = std::string_view::npos;
    if (length && *length >= 0 && static_cast<std::uint64_t>(*length) <= data.size() - p) {
      SyntaxReader check(data, p + static_cast<std::size_t>(*length));
      if (check.keyword("endstream")) {
        data_end = p + static_cast<std::size_t>(*length);
        after = check.pos();
      }
    }
    if (data_end == std::string_view::npos) {
      stream.length_mismatch = true;
      const std::size_t hit = find_keyword(data, "endstream", p);
      if (hit == std::string_view::npos) {
        data_end = data.size();
        after = data.size();
        result.warnings.push_back("stream without endstream");
      } else {
        data_end = hit;
        if (data_end > p && data[data_end - 1] == '\n') --data_end;
        if (data_end > p && data[data_end - 1] == '\r') --data_end;
        after = hit + 9;
      }
    }
    stream.raw = std::string(data.substr(p, data_end - p));
    stream.data_span = ByteRange{p, data_end};
    result.body = Value(std::move(stream));
    reader.seek(after);
  } else {
    reader.seek(after_body);
    result.body = std::move(*body);
  }
  const std::size_t before_end = reader.pos();
  if (reader.keyword("endobj")) {
    result.span = ByteRange{begin, reader.pos()};
  } else {
    reader.seek(before_end);
    result.warnings.push_back("object " + to_string(result.id) + " lacks endobj");
    result.span = ByteRange{begin, before_end};
  }
  return result;
}

}  // namespace texguard::pdf
