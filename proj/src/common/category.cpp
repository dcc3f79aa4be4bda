#include "texguard/common/category.hpp"

namespace texguard {

namespace {

constexpr std::array<std::string_view, kCategoryCount> kNames = {
    "User and group names",
    "System",
    "Hardware",
    "CPU",
    "Passwords",
    "Outdated software",
    "Known vulnerabilities",
    "Open ports and running services",
    "Network interfaces",
    "Hostnames",
    "Networking protocols",
    "Firewall configurations",
    "Routing tables",
    "Server configuration",
    "Web passwords",
    "SSL certificates",
};

}  // namespace

std::string_view category_name(Category category) {
  return kNames[category_index(category)];
}

std::optional<Category> parse_category(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return kAllCategories[i];
  }
  return std::nullopt;
}

}  // namespace texguard
