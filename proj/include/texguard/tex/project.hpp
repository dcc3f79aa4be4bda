#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "texguard/common/bytes.hpp"

namespace texguard::tex {

enum class InputTag {
  Internal,  // a readable file inside the project root
  External,  // absolute or escaping path; recorded, never opened
  Missing,   // relative path with no matching file
};

struct InputNode {
  // Project-relative generic path for internal and missing nodes, the literal
  // argument for external ones.
  std::string path;
  InputTag tag = InputTag::Internal;
};

struct InputEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  ByteRange span;  // the argument in the including file
  bool cycle = false;
};

struct InputGraph {
  std::vector<InputNode> nodes;  // nodes[0] is the entry file
  std::vector<InputEdge> edges;

  std::size_t find(const std::string& path) const;
  bool has_cycle() const;
};

// Follows \input, \include and \InputIfFileExists from `entry_file`. Only
// files that resolve inside `project_root` (after symlink resolution) are
// opened; everything else becomes a leaf.
InputGraph resolve_project_inputs(const std::filesystem::path& entry_file,
                                  const std::filesystem::path& project_root);

// True when `candidate` lies under `root` once both are canonicalised.
bool is_within(const std::filesystem::path& root, const std::filesystem::path& candidate);

}  // namespace texguard::tex
