#include "texguard/analyzer/policy.hpp"

#include "texguard/common/bytes.hpp"

namespace texguard::analyzer {

std::string_view sandbox_name(SandboxKind kind) {
  switch (kind) {
    case SandboxKind::None: return "none";
    case SandboxKind::Docker: return "docker";
    case SandboxKind::Kubernetes: return "kubernetes";
    case SandboxKind::Other: return "other";
    case SandboxKind::Unknown: return "unknown";
  }
  return "none";
}

SandboxKind parse_sandbox(std::string_view name) {
  if (name == "none") return SandboxKind::None;
  if (name == "docker") return SandboxKind::Docker;
  if (name == "kubernetes") return SandboxKind::Kubernetes;
  if (name == "other") return SandboxKind::Other;
  if (name == "unknown" || name == "?") return SandboxKind::Unknown;
  throw ConfigError("unknown sandbox '" + std::string(name) + "'");
}

void Policy::validate() const {
  if (mode == PolicyMode::Whitelist && allowed_commands.empty()) {
    throw ConfigError("whitelist mode requires a non-empty allow list");
  }
}

bool apply_policy_key(Policy& policy, const KeyValue& entry) {
  if (entry.key == "shell_escape_restricted") {
    policy.shell_escape_restricted = parse_bool(entry);
  } else if (entry.key == "file_io_restricted") {
    policy.file_io_restricted = parse_bool(entry);
  } else if (entry.key == "luatex_restricted") {
    policy.luatex_restricted = parse_bool(entry);
  } else if (entry.key == "sandbox") {
    policy.sandbox = parse_sandbox(entry.value);
  } else if (entry.key == "mode") {
    if (entry.value == "blacklist") {
      policy.mode = PolicyMode::Blacklist;
    } else if (entry.value == "whitelist") {
      policy.mode = PolicyMode::Whitelist;
    } else {
      throw ConfigError("line " + std::to_string(entry.line) + ": mode expects blacklist|whitelist");
    }
  } else if (entry.key == "allow") {
    for (const auto& word : split(entry.value, ',')) {
      std::string_view name = trim(word);
      if (!name.empty() && name.front() == '\\') name.remove_prefix(1);
      if (!name.empty()) policy.allowed_commands.emplace(name);
    }
  } else {
    return false;
  }
  return true;
}

Policy parse_policy(std::string_view text) {
  Policy policy;
  for (const auto& entry : parse_key_values(text)) {
    if (!apply_policy_key(policy, entry)) {
      throw ConfigError("line " + std::to_string(entry.line) + ": unknown policy key '" +
                        entry.key + "'");
    }
  }
  policy.validate();
  return policy;
}

std::string format_policy(const Policy& policy) {
  auto flag = [](bool value) { return value ? "true" : "false"; };
  std::string out;
  out += "shell_escape_restricted=" + std::string(flag(policy.shell_escape_restricted)) + "\n";
  out += "file_io_restricted=" + std::string(flag(policy.file_io_restricted)) + "\n";
  out += "luatex_restricted=" + std::string(flag(policy.luatex_restricted)) + "\n";
  out += "sandbox=" + std::string(sandbox_name(policy.sandbox)) + "\n";
  out += std::string("mode=") + (policy.mode == PolicyMode::Whitelist ? "whitelist" : "blacklist") +
         "\n";
  if (!policy.allowed_commands.empty()) {
    out += "allow=";
    bool first = true;
    for (const auto& name : policy.allowed_commands) {
      if (!first) out += ',';
      out += name;
      first = false;
    }
    out += "\n";
  }
  return out;
}

}  // namespace texguard::analyzer
