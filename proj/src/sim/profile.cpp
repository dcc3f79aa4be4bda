#include "texguard/sim/profile.hpp"

#include <algorithm>

#include <openssl/evp.h>

#include "texguard/common/bytes.hpp"
#include "texguard/common/keyvalue.hpp"

namespace fs = std::filesystem;

namespace texguard::sim {

namespace {

constexpr std::string_view kObservedPrefix = "observed.";
constexpr std::string_view kEnvPrefix = "env.";

std::set<std::string> parse_list(std::string_view value) {
  std::set<std::string> out;
  for (const auto& item : split(value, ',')) {
    const std::string_view name = trim(item);
    if (!name.empty()) out.emplace(name);
  }
  return out;
}

std::string join(const std::set<std::string>& items) {
  std::string out;
  for (const auto& item : items) {
    if (!out.empty()) out += ',';
    out += item;
  }
  return out;
}

[[noreturn]] void fail(const KeyValue& entry, const std::string& message) {
  throw ConfigError("line " + std::to_string(entry.line) + ": " + message);
}

void apply_env_key(Environment& env, const KeyValue& entry) {
  const std::string_view key = std::string_view(entry.key).substr(kEnvPrefix.size());
  if (key == "privileged") {
    env.privileged = parse_bool(entry);
  } else if (key == "absent_tools") {
    env.absent_tools = parse_list(entry.value);
  } else if (key == "absent_files") {
    env.absent_files = parse_list(entry.value);
  } else if (key == "root_only_tools") {
    env.root_only_tools = parse_list(entry.value);
  } else if (key == "root_only_files") {
    env.root_only_files = parse_list(entry.value);
  } else {
    fail(entry, "unknown environment key '" + entry.key + "'");
  }
}

std::string_view table_sandbox(analyzer::SandboxKind kind) {
  switch (kind) {
    case analyzer::SandboxKind::None: return "none";
    case analyzer::SandboxKind::Docker: return "Docker";
    case analyzer::SandboxKind::Kubernetes: return "Kubernetes";
    case analyzer::SandboxKind::Other: return "other";
    case analyzer::SandboxKind::Unknown: return "?";
  }
  return "?";
}

}  // namespace

std::string_view cell_outcome_name(CellOutcome outcome) {
  switch (outcome) {
    case CellOutcome::Obtained: return "obtained";
    case CellOutcome::ObtainedSandboxScoped: return "obtained_sandbox_scoped";
    case CellOutcome::Blocked: return "blocked";
    case CellOutcome::Unknown: return "unknown";
  }
  return "unknown";
}

CellOutcome parse_cell_outcome(std::string_view name) {
  for (CellOutcome o : {CellOutcome::Obtained, CellOutcome::ObtainedSandboxScoped,
                        CellOutcome::Blocked, CellOutcome::Unknown}) {
    if (cell_outcome_name(o) == name) return o;
  }
  throw ConfigError("unknown outcome '" + std::string(name) + "'");
}

Environment container_environment() {
  Environment env;
  env.preset = "container";
  env.absent_tools = {"debsecan", "ifconfig", "iptables", "lshw", "netstat", "nmap"};
  env.absent_files = {"/etc/apache2/*", "/etc/network/interfaces", "/etc/ssh/sshd_config"};
  env.root_only_tools = {"iptables"};
  env.root_only_files = {"/etc/apache2/.htpasswd", "/etc/shadow", "/etc/ssh/*_key"};
  return env;
}

Environment host_environment() {
  Environment env;
  env.preset = "host";
  env.root_only_tools = {"iptables"};
  env.root_only_files = {"/etc/apache2/.htpasswd", "/etc/shadow", "/etc/ssh/*_key"};
  return env;
}

Environment environment_preset(std::string_view name) {
  if (name == "container") return container_environment();
  if (name == "host") return host_environment();
  throw ConfigError("unknown environment '" + std::string(name) + "'");
}

ServiceProfile parse_profile(std::string_view text) {
  ServiceProfile profile;
  const auto entries = parse_key_values(text);
  // The preset must be in place before any override applies.
  for (const auto& entry : entries) {
    if (entry.key == "environment") profile.environment = environment_preset(entry.value);
  }
  CapabilityMatrix observed;
  bool has_observed = false;
  for (const auto& entry : entries) {
    if (entry.key == "environment") continue;
    if (entry.key == "name") {
      profile.name = entry.value;
    } else if (entry.key == "notes") {
      profile.notes = entry.value;
    } else if (entry.key.starts_with(kEnvPrefix)) {
      apply_env_key(profile.environment, entry);
    } else if (entry.key.starts_with(kObservedPrefix)) {
      const std::string_view name = std::string_view(entry.key).substr(kObservedPrefix.size());
      const auto category = parse_category(name);
      if (!category) fail(entry, "unknown category '" + std::string(name) + "'");
      if (entry.value != "obtained" && entry.value != "blocked") {
        fail(entry, "observed outcome must be obtained or blocked");
      }
      observed[*category] = parse_cell_outcome(entry.value);
      has_observed = true;
    } else if (!analyzer::apply_policy_key(profile.policy, entry)) {
      fail(entry, "unknown profile key '" + entry.key + "'");
    }
  }
  if (profile.name.empty()) throw ConfigError("profile has no name");
  profile.policy.validate();
  if (has_observed) {
    for (Category c : kAllCategories) {
      if (observed[c] == CellOutcome::Unknown) {
        throw ConfigError("observed row of " + profile.name + " lacks '" +
                          std::string(category_name(c)) + "'");
      }
    }
    profile.observed = observed;
  }
  return profile;
}

std::string format_profile(const ServiceProfile& profile) {
  std::string out = "name=" + profile.name + "\n";
  if (!profile.notes.empty()) out += "notes=" + profile.notes + "\n";
  out += analyzer::format_policy(profile.policy);
  const Environment& env = profile.environment;
  out += "environment=" + env.preset + "\n";
  const Environment base = environment_preset(env.preset);
  if (env.privileged != base.privileged) {
    out += std::string("env.privileged=") + (env.privileged ? "true" : "false") + "\n";
  }
  auto override_line = [&](const char* key, const std::set<std::string>& value,
                           const std::set<std::string>& preset) {
    if (value != preset) out += std::string("env.") + key + "=" + join(value) + "\n";
  };
  override_line("absent_tools", env.absent_tools, base.absent_tools);
  override_line("absent_files", env.absent_files, base.absent_files);
  override_line("root_only_tools", env.root_only_tools, base.root_only_tools);
  override_line("root_only_files", env.root_only_files, base.root_only_files);
  if (profile.observed) {
    for (Category c : kAllCategories) {
      out += std::string(kObservedPrefix) + std::string(category_name(c)) + "=" +
             std::string(cell_outcome_name((*profile.observed)[c])) + "\n";
    }
  }
  return out;
}

ServiceProfile load_profile(const fs::path& path) {
  try {
    return parse_profile(read_file(path.string()));
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

std::vector<ServiceProfile> load_profiles(const fs::path& dir) {
  std::vector<fs::path> paths;
  for (const auto& item : fs::directory_iterator(dir)) {
    if (item.is_regular_file() && item.path().extension() == ".profile") {
      paths.push_back(item.path());
    }
  }
  std::sort(paths.begin(), paths.end());
  std::vector<ServiceProfile> out;
  for (const auto& path : paths) out.push_back(load_profile(path));
  return out;
}

std::string render_restriction_table(const std::vector<ServiceProfile>& profiles) {
  auto flag = [](bool restricted) { return restricted ? "yes" : "no"; };
  std::string out = "service|shell escape restricted|file I/O restricted|LuaTeX restricted|sandbox\n";
  for (const auto& p : profiles) {
    out += p.name + "|" + flag(p.policy.shell_escape_restricted) + "|" +
           flag(p.policy.file_io_restricted) + "|" + flag(p.policy.luatex_restricted) + "|" +
           std::string(table_sandbox(p.policy.sandbox)) + "\n";
  }
  return out;
}

std::string render_observed_table(const std::vector<ServiceProfile>& profiles) {
  std::string out = "# " + std::string(kLeakMatrixLabel) + "\nservice";
  for (Category c : kAllCategories) out += "|" + std::string(category_name(c));
  out += "\n";
  for (const auto& p : profiles) {
    if (!p.observed) continue;
    out += p.name;
    for (Category c : kAllCategories) {
      out += (*p.observed)[c] == CellOutcome::Blocked ? "|no" : "|yes";
    }
    out += "\n";
  }
  return out;
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int size = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &size, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  return to_hex(std::string_view(reinterpret_cast<const char*>(digest), size));
}

}  // namespace texguard::sim
