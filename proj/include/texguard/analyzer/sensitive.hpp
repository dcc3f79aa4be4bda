#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "texguard/common/category.hpp"

namespace texguard::analyzer {

enum class PathKind { ProjectRelative, Absolute, ParentEscape };

std::string_view path_kind_name(PathKind kind);

struct PathClass {
  PathKind kind = PathKind::ProjectRelative;
  bool sensitive = false;
  std::optional<Category> category;  // set iff sensitive
  std::string normalized;            // lexically normalised form
};

// Lexical normalisation: `.` dropped, `..` folded where possible. Absolute
// paths cannot climb above `/`; relative ones keep their leading `..`.
std::string normalize_path(std::string_view path);

// Kind from the leading `/`, `~` or `..` segments; sensitivity by longest
// matching entry of the sensitive-path catalog. Escaping paths are matched as
// if their `..` prefix had climbed to the filesystem root.
PathClass classify_path(std::string_view path);

struct SensitivePathEntry {
  std::string_view pattern;  // absolute path or shell glob
  Category category;
};

std::span<const SensitivePathEntry> sensitive_path_catalog();

struct SensitiveMatch {
  std::size_t offset = 0;  // into the classified text
  std::size_t length = 0;
  Category category;
  std::string term;  // the command name or path that matched
};

// Splits a shell command line into simple commands and reports reconnaissance
// commands (by name and flags) and sensitive paths among the arguments.
// Redirection targets are not arguments.
std::vector<SensitiveMatch> classify_command(std::string_view command);

}  // namespace texguard::analyzer
