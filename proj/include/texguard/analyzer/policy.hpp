#pragma once

#include <set>
#include <string>
#include <string_view>

#include "texguard/common/keyvalue.hpp"

namespace texguard::analyzer {

enum class SandboxKind { None, Docker, Kubernetes, Other, Unknown };

std::string_view sandbox_name(SandboxKind kind);
SandboxKind parse_sandbox(std::string_view name);

// Unknown sandboxes confine nothing we can rely on.
inline bool is_confining(SandboxKind kind) {
  return kind == SandboxKind::Docker || kind == SandboxKind::Kubernetes ||
         kind == SandboxKind::Other;
}

enum class PolicyMode { Blacklist, Whitelist };

// Compile-service restrictions: three command restriction flags plus an
// isolation boundary, optionally with a whitelist of permitted commands.
struct Policy {
  bool shell_escape_restricted = false;
  bool file_io_restricted = false;
  bool luatex_restricted = false;
  SandboxKind sandbox = SandboxKind::None;
  PolicyMode mode = PolicyMode::Blacklist;
  std::set<std::string> allowed_commands;  // control word names, whitelist mode only

  // Throws ConfigError when the whitelist is empty in whitelist mode.
  void validate() const;
};

// Applies a policy key to `policy`. Returns false for keys that are not
// policy keys so callers embedding policies in larger files can handle them.
bool apply_policy_key(Policy& policy, const KeyValue& entry);

// Parses a `.policy` file; unknown keys are errors.
Policy parse_policy(std::string_view text);
std::string format_policy(const Policy& policy);

}  // namespace texguard::analyzer
