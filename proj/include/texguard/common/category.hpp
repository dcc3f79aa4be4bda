#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace texguard {

// Kinds of host information a malicious document can leak. The display names
// are the column headings of the published leak matrix and double as stable
// identifiers in every file format this project reads or writes.
enum class Category : std::uint8_t {
  UserGroupNames,
  System,
  Hardware,
  Cpu,
  Passwords,
  OutdatedSoftware,
  KnownVulnerabilities,
  OpenPorts,
  NetworkInterfaces,
  Hostnames,
  NetworkingProtocols,
  FirewallConfigurations,
  RoutingTables,
  ServerConfiguration,
  WebPasswords,
  SslCertificates,
};

inline constexpr std::size_t kCategoryCount = 16;

inline constexpr std::array<Category, kCategoryCount> kAllCategories = {
    Category::UserGroupNames,       Category::System,
    Category::Hardware,             Category::Cpu,
    Category::Passwords,            Category::OutdatedSoftware,
    Category::KnownVulnerabilities, Category::OpenPorts,
    Category::NetworkInterfaces,    Category::Hostnames,
    Category::NetworkingProtocols,  Category::FirewallConfigurations,
    Category::RoutingTables,        Category::ServerConfiguration,
    Category::WebPasswords,         Category::SslCertificates,
};

// Provenance label carried by leak matrices transcribed from observation.
inline constexpr std::string_view kLeakMatrixLabel =
    "Information obtained by exploiting the file Input/Ouput";

std::string_view category_name(Category category);
std::optional<Category> parse_category(std::string_view name);

inline std::size_t category_index(Category category) {
  return static_cast<std::size_t>(category);
}

}  // namespace texguard
