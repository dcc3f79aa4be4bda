#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "texguard/analyzer/policy.hpp"
#include "texguard/common/category.hpp"

namespace texguard::sim {

enum class CellOutcome { Obtained, ObtainedSandboxScoped, Blocked, Unknown };

std::string_view cell_outcome_name(CellOutcome outcome);
CellOutcome parse_cell_outcome(std::string_view name);

struct CapabilityMatrix {
  std::string label{kLeakMatrixLabel};
  std::array<CellOutcome, kCategoryCount> cells{};

  CapabilityMatrix() { cells.fill(CellOutcome::Unknown); }

  CellOutcome& operator[](Category c) { return cells[category_index(c)]; }
  CellOutcome operator[](Category c) const { return cells[category_index(c)]; }
  bool operator==(const CapabilityMatrix&) const = default;
};

// What the compile host actually offers to an unprivileged process, separate
// from the service's restriction flags. Entries of the file sets are glob
// patterns.
struct Environment {
  std::string preset;
  bool privileged = false;
  std::set<std::string> absent_tools;
  std::set<std::string> absent_files;
  std::set<std::string> root_only_tools;
  std::set<std::string> root_only_files;

  bool operator==(const Environment&) const = default;
};

// Minimal container image: no net-tools, no server packages.
Environment container_environment();
// Full server installation.
Environment host_environment();
Environment environment_preset(std::string_view name);

struct ServiceProfile {
  std::string name;
  analyzer::Policy policy;
  Environment environment = host_environment();
  std::optional<CapabilityMatrix> observed;
  std::string notes;
};

// Profile text: policy keys, `name`, `notes`, `environment=container|host`,
// optional `env.*` overrides, and `observed.<category>=obtained|blocked`.
ServiceProfile parse_profile(std::string_view text);
std::string format_profile(const ServiceProfile& profile);
ServiceProfile load_profile(const std::filesystem::path& path);
// Every `*.profile` in `dir`, sorted by file name.
std::vector<ServiceProfile> load_profiles(const std::filesystem::path& dir);

// Line-per-service renderings in the layout of the committed transcriptions.
std::string render_restriction_table(const std::vector<ServiceProfile>& profiles);
std::string render_observed_table(const std::vector<ServiceProfile>& profiles);

std::string sha256_hex(std::string_view bytes);

}  // namespace texguard::sim
