#include "texguard/forensics/signatures.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>

#include "texguard/common/bytes.hpp"

namespace texguard::forensics {

namespace {

struct Marker {
  std::string_view text;
  Category category;
};

constexpr std::array<Marker, 36> kMarkers = {{
    {"uid=", Category::UserGroupNames},
    {"Linux version ", Category::System},
    {"GNU/Linux", Category::System},
    {"*-memory", Category::Hardware},
    {"*-core", Category::Hardware},
    {"Host bridge:", Category::Hardware},
    {"model name", Category::Cpu},
    {"CPU(s):", Category::Cpu},
    {"cpu MHz", Category::Cpu},
    {"[upgradable from:", Category::OutdatedSoftware},
    {"CVE-", Category::KnownVulnerabilities},
    {"LISTEN", Category::OpenPorts},
    {"/tcp open", Category::OpenPorts},
    {"PORT STATE SERVICE", Category::OpenPorts},
    {"inet ", Category::NetworkInterfaces},
    {"Link encap:", Category::NetworkInterfaces},
    {"iface ", Category::NetworkInterfaces},
    {"ip6-localhost", Category::Hostnames},
    {"Chain INPUT", Category::FirewallConfigurations},
    {"Chain FORWARD", Category::FirewallConfigurations},
    {"-A INPUT", Category::FirewallConfigurations},
    {"Kernel IP routing table", Category::RoutingTables},
    {"Iface\tDestination\tGateway", Category::RoutingTables},
    {"default via ", Category::RoutingTables},
    {"PermitRootLogin", Category::ServerConfiguration},
    {"AuthorizedKeysFile", Category::ServerConfiguration},
    {"ServerRoot", Category::ServerConfiguration},
    {"DocumentRoot", Category::ServerConfiguration},
    {"<VirtualHost", Category::ServerConfiguration},
    {"$apr1$", Category::WebPasswords},
    {":{SHA}", Category::WebPasswords},
    {"BEGIN OPENSSH PRIVATE KEY", Category::SslCertificates},
    {"PRIVATE KEY-----", Category::SslCertificates},
    {"BEGIN CERTIFICATE", Category::SslCertificates},
    {"root:", Category::UserGroupNames},
    {"Destination     Gateway", Category::RoutingTables},
}};

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::vector<std::string_view> fields(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = line.find(sep, start);
    out.push_back(line.substr(start, end == std::string_view::npos ? end : end - start));
    if (end == std::string_view::npos) return out;
    start = end + 1;
  }
}

std::vector<std::string_view> words(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

bool is_ipv4(std::string_view s) {
  const auto parts = fields(s, '.');
  return parts.size() == 4 && std::all_of(parts.begin(), parts.end(), [](std::string_view p) {
           return all_digits(p) && p.size() <= 3;
         });
}

// Line-shaped records: passwd, group, shadow, hosts, protocols, uname.
void match_line(std::string_view line, std::set<Category>& found) {
  const auto colon = fields(line, ':');
  if (colon.size() == 7 && all_digits(colon[2]) && all_digits(colon[3])) {
    found.insert(Category::UserGroupNames);
  }
  if (colon.size() == 4 && !colon[0].empty() && all_digits(colon[2])) {
    found.insert(Category::UserGroupNames);
  }
  if (colon.size() == 9 && !colon[0].empty() && !colon[1].empty() &&
      (colon[1][0] == '$' || colon[1][0] == '*' || colon[1][0] == '!')) {
    found.insert(Category::Passwords);
  }
  const auto w = words(line);
  if (w.size() >= 2 && (is_ipv4(w[0]) || w[0] == "::1") &&
      std::any_of(w.begin() + 1, w.end(), [](std::string_view x) { return x == "localhost"; })) {
    found.insert(Category::Hostnames);
  }
  if (w.size() >= 3 && all_digits(w[1]) && !w[0].empty() && w[0].front() != '#') {
    std::string upper(w[0]);
    for (char& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (upper == w[2] && (w[0] == "ip" || w[0] == "tcp" || w[0] == "udp" || w[0] == "icmp")) {
      found.insert(Category::NetworkingProtocols);
    }
  }
  if (w.size() >= 3 && w[0] == "Linux" && w.back() == "GNU/Linux") found.insert(Category::System);
}

}  // namespace

std::vector<Category> match_categories(std::string_view text) {
  std::set<Category> found;
  for (const auto& marker : kMarkers) {
    if (text.find(marker.text) != std::string_view::npos) found.insert(marker.category);
  }
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.size() <= 4096) match_line(line, found);
    start = end + 1;
  }
  return {found.begin(), found.end()};
}

}  // namespace texguard::forensics
