#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "texguard/common/bytes.hpp"
#include "texguard/common/category.hpp"

namespace texguard::analyzer {

enum class RuleId {
  ShellEscape,    // R1
  FileRead,       // R2
  FileWrite,      // R3
  LuaExec,        // R4
  Hiding,         // R5
  SensitivePath,  // R6
  Obfuscation,    // R7
  NotAllowed,     // W1, whitelist mode only
};

enum class Severity { Critical, High, Medium, Info };

enum class Disposition { Exploitable, BlockedByPolicy, SandboxContained };

std::string_view rule_code(RuleId rule);
std::optional<RuleId> parse_rule_code(std::string_view code);
std::string_view severity_name(Severity severity);
std::string_view disposition_name(Disposition disposition);

struct Finding {
  RuleId rule;
  Severity severity;
  ByteRange span;
  std::string evidence;
  Disposition disposition = Disposition::Exploitable;
  std::optional<Category> category;

  bool operator==(const Finding&) const = default;
};

}  // namespace texguard::analyzer
