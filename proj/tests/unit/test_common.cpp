#include <doctest.h>

#include <set>

#include "texguard/common/bytes.hpp"
#include "texguard/common/category.hpp"
#include "texguard/common/keyvalue.hpp"

using namespace texguard;

TEST_CASE("category names round-trip and are distinct") {
  std::set<std::string_view> names;
  for (Category c : kAllCategories) {
    const auto name = category_name(c);
    CHECK(names.insert(name).second);
    REQUIRE(parse_category(name).has_value());
    CHECK(*parse_category(name) == c);
  }
  CHECK(names.size() == 16);
  CHECK(category_name(Category::OpenPorts) == "Open ports and running services");
  CHECK_FALSE(parse_category("Printers").has_value());
}

TEST_CASE("printable ratio") {
  CHECK(printable_ratio("") == 0.0);
  CHECK(printable_ratio("abc\n") == 1.0);
  CHECK(printable_ratio(std::string("\x00\x01" "ab", 4)) == doctest::Approx(0.5));
}

TEST_CASE("hex helpers") {
  std::string out;
  CHECK(to_hex(std::string("\x00\xff", 2)) == "00ff");
  REQUIRE(from_hex("00FFa1", out));
  CHECK(out == std::string("\x00\xff\xa1", 3));
  CHECK_FALSE(from_hex("abc", out));
  CHECK_FALSE(from_hex("zz", out));
}

TEST_CASE("escape_bytes keeps printable text and truncates") {
  CHECK(escape_bytes("a\\b") == "a\\\\b");
  CHECK(escape_bytes(std::string("\x01", 1)) == "\\x01");
  CHECK(escape_bytes("abcdef", 3) == "abc");
}

TEST_CASE("key/value parsing") {
  const auto entries = parse_key_values("# comment\n\n a = 1 \nobserved.User and group names=obtained\n");
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].key == "a");
  CHECK(entries[0].value == "1");
  CHECK(entries[0].line == 3);
  CHECK(entries[1].key == "observed.User and group names");
  CHECK_THROWS_AS(parse_key_values("novalue\n"), ConfigError);
  CHECK(parse_bool(KeyValue{"k", "yes", 1}));
  CHECK_FALSE(parse_bool(KeyValue{"k", "false", 1}));
  CHECK_THROWS_AS(parse_bool(KeyValue{"k", "maybe", 1}), ConfigError);
}
