#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "texguard/common/bytes.hpp"

namespace texguard::pdf {

struct ObjectId {
  std::uint32_t number = 0;
  std::uint16_t generation = 0;

  auto operator<=>(const ObjectId&) const = default;
};

std::string to_string(ObjectId id);  // "12 0"

struct Null {
  bool operator==(const Null&) const = default;
};

struct Name {
  std::string value;  // without the slash, #xx escapes decoded
  bool operator==(const Name&) const = default;
};

struct String {
  std::string bytes;
  bool hex = false;  // written as <...>; ignored by equality
  bool operator==(const String& other) const { return bytes == other.bytes; }
};

struct Reference {
  ObjectId id;
  bool operator==(const Reference&) const = default;
};

struct Value;
struct DictEntry;
using Array = std::vector<Value>;

// Insertion-ordered dictionary; keys are unique.
struct Dict {
  std::vector<DictEntry> entries;

  const Value* get(std::string_view key) const;
  Value* get(std::string_view key);
  void set(std::string key, Value value);
  bool erase(std::string_view key);
  bool operator==(const Dict& other) const;
};

struct Stream {
  Dict dict;
  std::string raw;       // bytes between `stream` EOL and `endstream`
  ByteRange data_span;   // where `raw` sits in the file; not part of equality
  bool length_mismatch = false;

  bool operator==(const Stream& other) const;
};

struct Value {
  std::variant<Null, bool, std::int64_t, double, String, Name, Array, Dict, Stream, Reference> data;

  Value() = default;
  Value(bool v) : data(v) {}
  template <std::integral I>
    requires(!std::same_as<I, bool>)
  Value(I v) : data(static_cast<std::int64_t>(v)) {}
  template <typename T>
    requires(std::same_as<T, Null> || std::same_as<T, double> || std::same_as<T, String> ||
             std::same_as<T, Name> || std::same_as<T, Array> || std::same_as<T, Dict> ||
             std::same_as<T, Stream> || std::same_as<T, Reference>)
  Value(T v) : data(std::move(v)) {}

  bool is_null() const { return std::holds_alternative<Null>(data); }
  const Dict* as_dict() const { return std::get_if<Dict>(&data); }
  Dict* as_dict() { return std::get_if<Dict>(&data); }
  const Array* as_array() const { return std::get_if<Array>(&data); }
  const Stream* as_stream() const { return std::get_if<Stream>(&data); }
  Stream* as_stream() { return std::get_if<Stream>(&data); }
  const Reference* as_reference() const { return std::get_if<Reference>(&data); }
  const String* as_string() const { return std::get_if<String>(&data); }
  std::optional<std::int64_t> as_int() const;
  std::optional<double> as_number() const;  // ints widen
  std::optional<std::string_view> as_name() const;
  // Dictionary of a dict or of a stream.
  const Dict* dict_like() const;

  bool operator==(const Value& other) const { return data == other.data; }
};

struct DictEntry {
  std::string key;  // name without slash
  Value value;
  bool operator==(const DictEntry&) const = default;
};

// Lower-case body kind for dumps: null, bool, int, real, string, name, array,
// dict, stream, ref.
std::string_view kind_name(const Value& value);

// PDF syntax for a value. Streams get a /Length matching `raw`.
std::string serialize(const Value& value);
std::string serialize_name(std::string_view name);

}  // namespace texguard::pdf
