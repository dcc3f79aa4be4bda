#include "texguard/analyzer/sensitive.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <array>

namespace texguard::analyzer {

namespace {

// Targets of the published reconnaissance probes, plus the /proc files that
// offer file-read routes to the same information.
constexpr std::array<SensitivePathEntry, 14> kSensitivePaths = {{
    {"/etc/shadow", Category::Passwords},
    {"/etc/passwd", Category::UserGroupNames},
    {"/etc/group", Category::UserGroupNames},
    {"/etc/hosts", Category::Hostnames},
    {"/etc/protocols", Category::NetworkingProtocols},
    {"/etc/network/interfaces", Category::NetworkInterfaces},
    {"/etc/ssh/sshd_config", Category::ServerConfiguration},
    {"/etc/apache2/apache2.conf", Category::ServerConfiguration},
    {"/etc/apache2/.htpasswd", Category::WebPasswords},
    {"/etc/ssh/*_key", Category::SslCertificates},
    {"/proc/self/cgroup", Category::System},
    {"/proc/version", Category::System},
    {"/proc/cpuinfo", Category::Cpu},
    {"/proc/net/route", Category::RoutingTables},
}};

struct ShellWord {
  std::size_t offset = 0;
  std::size_t length = 0;
  std::string text;  // quotes and escapes removed
};

using SimpleCommand = std::vector<ShellWord>;

bool is_command_separator(char c) {
  return c == '|' || c == ';' || c == '&' || c == '(' || c == ')' || c == '`' || c == '\n';
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::vector<SimpleCommand> split_shell(std::string_view line) {
  std::vector<SimpleCommand> commands(1);
  ShellWord word;
  bool in_word = false;
  bool redirect_pending = false;

  auto finish_word = [&] {
    if (!in_word) return;
    if (redirect_pending) {
      redirect_pending = false;
    } else {
      commands.back().push_back(std::move(word));
    }
    word = ShellWord{};
    in_word = false;
  };
  auto finish_command = [&] {
    finish_word();
    redirect_pending = false;
    if (!commands.back().empty()) commands.emplace_back();
  };

  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (is_space(c)) {
      finish_word();
      ++i;
    } else if (c == '$' && i + 1 < line.size() && line[i + 1] == '(') {
      finish_command();
      i += 2;
    } else if (is_command_separator(c)) {
      finish_command();
      ++i;
    } else if (c == '>' || c == '<') {
      // `2>` style descriptors are part of the operator.
      bool all_digits = in_word && !word.text.empty() &&
                        std::all_of(word.text.begin(), word.text.end(),
                                    [](char d) { return d >= '0' && d <= '9'; });
      if (all_digits) {
        word = ShellWord{};
        in_word = false;
      } else {
        finish_word();
      }
      while (i < line.size() && (line[i] == '>' || line[i] == '<' || line[i] == '&')) ++i;
      redirect_pending = true;
    } else {
      if (!in_word) {
        in_word = true;
        word.offset = i;
      }
      if (c == '\'' || c == '"') {
        const char quote = c;
        ++i;
        while (i < line.size() && line[i] != quote) {
          if (quote == '"' && line[i] == '\\' && i + 1 < line.size()) ++i;
          word.text += line[i++];
        }
        if (i < line.size()) ++i;
      } else if (c == '\\' && i + 1 < line.size()) {
        word.text += line[i + 1];
        i += 2;
      } else {
        word.text += c;
        ++i;
      }
      word.length = i - word.offset;
    }
  }
  finish_word();
  if (commands.back().empty()) commands.pop_back();
  return commands;
}

std::string_view basename(std::string_view path) {
  const std::size_t slash = path.rfind('/');
  return slash == std::string_view::npos ? path : path.substr(slash + 1);
}

bool is_assignment(std::string_view word) {
  const std::size_t eq = word.find('=');
  if (eq == std::string_view::npos || eq == 0) return false;
  return std::all_of(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(eq), [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  });
}

bool is_wrapper(std::string_view name) {
  return name == "sudo" || name == "env" || name == "exec" || name == "nohup" ||
         name == "command" || name == "nice";
}

// Single-letter options of a command, e.g. "tulpn" for `netstat -tulpn`.
std::string short_flags(const SimpleCommand& command, std::size_t from) {
  std::string flags;
  for (std::size_t i = from; i < command.size(); ++i) {
    const std::string& w = command[i].text;
    if (w.size() >= 2 && w[0] == '-' && w[1] != '-') flags += w.substr(1);
  }
  return flags;
}

bool has_argument(const SimpleCommand& command, std::size_t from, std::string_view value) {
  for (std::size_t i = from; i < command.size(); ++i) {
    if (command[i].text == value) return true;
  }
  return false;
}

std::string first_operand(const SimpleCommand& command, std::size_t from) {
  for (std::size_t i = from; i < command.size(); ++i) {
    if (!command[i].text.empty() && command[i].text[0] != '-') return command[i].text;
  }
  return {};
}

// Reconnaissance signatures by command name and options.
std::vector<Category> command_categories(std::string_view name, const SimpleCommand& command,
                                         std::size_t args) {
  const std::string flags = short_flags(command, args);
  auto has_flag = [&](char f) { return flags.find(f) != std::string::npos; };
  if (name == "users" || name == "groups" || name == "id" || name == "whoami") {
    return {Category::UserGroupNames};
  }
  if (name == "getent" && (has_argument(command, args, "passwd") ||
                           has_argument(command, args, "group"))) {
    return {Category::UserGroupNames};
  }
  if (name == "uname" || name == "hostnamectl" || name == "lsb_release") return {Category::System};
  if (name == "lshw" || name == "lspci" || name == "lsusb" || name == "dmidecode") {
    return {Category::Hardware};
  }
  if (name == "lscpu") return {Category::Cpu};
  if ((name == "apt" || name == "apt-get") && has_argument(command, args, "--upgradable")) {
    return {Category::OutdatedSoftware};
  }
  if (name == "debsecan") return {Category::KnownVulnerabilities};
  if (name == "nmap") return {Category::OpenPorts};
  if (name == "netstat") {
    std::vector<Category> found;
    if (has_flag('l') || has_flag('a')) found.push_back(Category::OpenPorts);
    if (has_flag('r')) found.push_back(Category::RoutingTables);
    if (has_flag('i')) found.push_back(Category::NetworkInterfaces);
    return found;
  }
  if (name == "ss" && has_flag('l')) return {Category::OpenPorts};
  if (name == "route") return {Category::RoutingTables};
  if (name == "ifconfig") return {Category::NetworkInterfaces};
  if (name == "ip") {
    const std::string object = first_operand(command, args);
    if (object == "route" || object == "r" || object == "ro") return {Category::RoutingTables};
    if (object == "addr" || object == "a" || object == "address" || object == "link") {
      return {Category::NetworkInterfaces};
    }
  }
  if (name == "iptables" || name == "ip6tables" || name == "nft" || name == "ufw") {
    return {Category::FirewallConfigurations};
  }
  return {};
}

bool looks_like_path(std::string_view word) {
  return !word.empty() && (word.front() == '/' || word.front() == '~' ||
                           word.find('/') != std::string_view::npos);
}

bool glob_match(std::string_view pattern, const std::string& path) {
  return fnmatch(std::string(pattern).c_str(), path.c_str(), FNM_PATHNAME | FNM_PERIOD) == 0;
}

}  // namespace

std::string_view path_kind_name(PathKind kind) {
  switch (kind) {
    case PathKind::ProjectRelative: return "project_relative";
    case PathKind::Absolute: return "absolute";
    case PathKind::ParentEscape: return "parent_escape";
  }
  return "project_relative";
}

std::span<const SensitivePathEntry> sensitive_path_catalog() { return kSensitivePaths; }

std::string normalize_path(std::string_view path) {
  const bool absolute = !path.empty() && path.front() == '/';
  std::vector<std::string_view> segments;
  std::size_t start = 0;
  while (start <= path.size()) {
    std::size_t end = path.find('/', start);
    if (end == std::string_view::npos) end = path.size();
    const std::string_view segment = path.substr(start, end - start);
    start = end + 1;
    if (segment.empty() || segment == ".") {
      if (end == path.size()) break;
      continue;
    }
    if (segment == "..") {
      if (!segments.empty() && segments.back() != "..") {
        segments.pop_back();
      } else if (!absolute) {
        segments.push_back(segment);
      }
    } else {
      segments.push_back(segment);
    }
    if (end == path.size()) break;
  }
  std::string out = absolute ? "/" : "";
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (i > 0) out += '/';
    out += segments[i];
  }
  if (out.empty()) out = ".";
  return out;
}

PathClass classify_path(std::string_view path) {
  PathClass result;
  result.normalized = normalize_path(path);
  std::string target;
  if (!path.empty() && path.front() == '/') {
    result.kind = PathKind::Absolute;
    target = result.normalized;
  } else if (!path.empty() && path.front() == '~') {
    result.kind = PathKind::Absolute;
  } else if (result.normalized == ".." || result.normalized.rfind("../", 0) == 0) {
    result.kind = PathKind::ParentEscape;
    std::string_view rest = result.normalized;
    while (rest.rfind("..", 0) == 0) {
      rest.remove_prefix(rest.size() >= 3 ? 3 : 2);
    }
    target = "/" + std::string(rest);
  } else {
    result.kind = PathKind::ProjectRelative;
  }
  if (target.empty()) return result;

  std::size_t best_length = 0;
  for (const auto& entry : kSensitivePaths) {
    const bool exact_or_glob = glob_match(entry.pattern, target) || entry.pattern == target;
    const bool under = target.size() > entry.pattern.size() &&
                       target.compare(0, entry.pattern.size(), entry.pattern) == 0 &&
                       target[entry.pattern.size()] == '/';
    if ((exact_or_glob || under) && entry.pattern.size() > best_length) {
      best_length = entry.pattern.size();
      result.sensitive = true;
      result.category = entry.category;
    }
  }
  return result;
}

std::vector<SensitiveMatch> classify_command(std::string_view line) {
  std::vector<SensitiveMatch> matches;
  for (const auto& command : split_shell(line)) {
    std::size_t head = 0;
    while (head < command.size() &&
           (is_assignment(command[head].text) || is_wrapper(basename(command[head].text)))) {
      ++head;
    }
    if (head >= command.size()) continue;
    const ShellWord& name_word = command[head];
    const std::string_view name = basename(name_word.text);
    for (Category category : command_categories(name, command, head + 1)) {
      matches.push_back(SensitiveMatch{name_word.offset, name_word.length, category,
                                       std::string(name)});
    }
    for (std::size_t i = head + 1; i < command.size(); ++i) {
      const ShellWord& word = command[i];
      if (!looks_like_path(word.text)) continue;
      const PathClass cls = classify_path(word.text);
      if (cls.sensitive) {
        matches.push_back(SensitiveMatch{word.offset, word.length, *cls.category, word.text});
      }
    }
  }
  std::stable_sort(matches.begin(), matches.end(),
                   [](const SensitiveMatch& a, const SensitiveMatch& b) { return a.offset < b.offset; });
  return matches;
}

}  // namespace texguard::analyzer
