#include "texguard/pdf/object.hpp"

#include <cmath>
#include <cstdio>

namespace texguard::pdf {

std::string to_string(ObjectId id) {
  return std::to_string(id.number) + " " + std::to_string(id.generation);
}

const Value* Dict::get(std::string_view key) const {
  for (const auto& entry : entries) {
    if (entry.key == key) return &entry.value;
  }
  return nullptr;
}

Value* Dict::get(std::string_view key) {
  for (auto& entry : entries) {
    if (entry.key == key) return &entry.value;
  }
  return nullptr;
}

void Dict::set(std::string key, Value value) {
  if (Value* existing = get(key)) {
    *existing = std::move(value);
    return;
  }
  entries.push_back(DictEntry{std::move(key), std::move(value)});
}

bool Dict::erase(std::string_view key) {
  for (auto it = entries.begin(); it != entries.end(); ++it) {
    if (it->key == key) {
      entries.erase(it);
      return true;
    }
  }
  return false;
}

bool Dict::operator==(const Dict& other) const { return entries == other.entries; }

bool Stream::operator==(const Stream& other) const {
  return dict == other.dict && raw == other.raw;
}

std::optional<std::int64_t> Value::as_int() const {
  if (const auto* i = std::get_if<std::int64_t>(&data)) return *i;
  return std::nullopt;
}

std::optional<double> Value::as_number() const {
  if (const auto* i = std::get_if<std::int64_t>(&data)) return static_cast<double>(*i);
  if (const auto* d = std::get_if<double>(&data)) return *d;
  return std::nullopt;
}

std::optional<std::string_view> Value::as_name() const {
  if (const auto* n = std::get_if<Name>(&data)) return std::string_view(n->value);
  return std::nullopt;
}

const Dict* Value::dict_like() const {
  if (const auto* d = as_dict()) return d;
  if (const auto* s = as_stream()) return &s->dict;
  return nullptr;
}

std::string_view kind_name(const Value& value) {
  static constexpr std::string_view kNames[] = {"null",   "bool",  "int",  "real",   "string",
                                                "name",   "array", "dict", "stream", "ref"};
  return kNames[value.data.index()];
}

namespace {

bool is_regular_name_char(unsigned char c) {
  if (c <= 0x20 || c >= 0x7f || c == '#') return false;
  switch (c) {
    case '(': case ')': case '<': case '>': case '[': case ']':
    case '{': case '}': case '/': case '%':
      return false;
    default:
      return true;
  }
}

std::string serialize_string(const String& s) {
  static constexpr char kDigits[] = "0123456789ABCDEF";
  std::string out;
  if (s.hex) {
    out.reserve(s.bytes.size() * 2 + 2);
    out += '<';
    for (unsigned char c : s.bytes) {
      out += kDigits[c >> 4];
      out += kDigits[c & 0xf];
    }
    out += '>';
    return out;
  }
  out.reserve(s.bytes.size() + 2);
  out += '(';
  for (char c : s.bytes) {
    switch (c) {
      case '(': out += "\\("; break;
      case ')': out += "\\)"; break;
      case '\\': out += "\\\\"; break;
      case '\r': out += "\\r"; break;
      case '\n': out += "\\n"; break;
      default: out += c;
    }
  }
  out += ')';
  return out;
}

std::string serialize_real(double d) {
  if (!std::isfinite(d)) return "0";
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6f", d);
  std::string out = buffer;
  while (!out.empty() && out.back() == '0') out.pop_back();
  if (!out.empty() && out.back() == '.') out.pop_back();
  if (out == "-0") out = "0";
  return out;
}

void serialize_into(const Value& value, std::string& out);

void serialize_dict(const Dict& dict, std::string& out) {
  out += "<<";
  for (const auto& entry : dict.entries) {
    out += serialize_name(entry.key);
    out += ' ';
    serialize_into(entry.value, out);
    out += ' ';
  }
  out += ">>";
}

void serialize_into(const Value& value, std::string& out) {
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Null>) {
          out += "null";
        } else if constexpr (std::is_same_v<T, bool>) {
          out += v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          out += std::to_string(v);
        } else if constexpr (std::is_same_v<T, double>) {
          out += serialize_real(v);
        } else if constexpr (std::is_same_v<T, String>) {
          out += serialize_string(v);
        } else if constexpr (std::is_same_v<T, Name>) {
          out += serialize_name(v.value);
        } else if constexpr (std::is_same_v<T, Array>) {
          out += '[';
          for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out += ' ';
            serialize_into(v[i], out);
          }
          out += ']';
        } else if constexpr (std::is_same_v<T, Dict>) {
          serialize_dict(v, out);
        } else if constexpr (std::is_same_v<T, Stream>) {
          Dict dict = v.dict;
          dict.set("Length", Value(static_cast<std::int64_t>(v.raw.size())));
          serialize_dict(dict, out);
          out += "\nstream\n";
          out += v.raw;
          out += "\nendstream";
        } else if constexpr (std::is_same_v<T, Reference>) {
          out += to_string(v.id);
          out += " R";
        }
      },
      value.data);
}

}  // namespace

std::string serialize_name(std::string_view name) {
  static constexpr char kDigits[] = "0123456789ABCDEF";
  std::string out = "/";
  for (unsigned char c : name) {
    if (is_regular_name_char(c)) {
      out += static_cast<char>(c);
    } else {
      out += '#';
      out += kDigits[c >> 4];
      out += kDigits[c & 0xf];
    }
  }
  return out;
}

std::string serialize(const Value& value) {
  std::string out;
  serialize_into(value, out);
  return out;
}

}  // namespace texguard::pdf
