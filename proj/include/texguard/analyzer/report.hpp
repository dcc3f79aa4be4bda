#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "texguard/analyzer/finding.hpp"
#include "texguard/analyzer/policy.hpp"

namespace texguard::analyzer {

struct FileFindings {
  std::string path;  // project-relative, generic separators
  std::vector<Finding> findings;
  std::optional<std::string> error;     // set when the file could not be read
  std::vector<std::size_t> line_starts;  // for line:column rendering
};

struct ReportSummary {
  std::size_t files = 0;
  std::size_t findings = 0;
  std::map<std::string, std::size_t> by_rule;
  std::map<std::string, std::size_t> by_severity;
  std::map<std::string, std::size_t> by_disposition;
  std::vector<Category> categories;  // distinct, in category order
};

struct FindingReport {
  std::vector<FileFindings> files;

  ReportSummary summary() const;
  std::size_t finding_count() const;
};

// Lexes and analyzes one in-memory source.
FileFindings scan_source(std::string path, std::string_view source, const Policy& policy);

// Every internal file reachable from `entry` through input commands, then every
// .sty and .cls under `root`, each analyzed once. An empty `entry` scans only
// the style and class files. Unreadable files become error entries.
FindingReport scan_project(const std::filesystem::path& root, const std::filesystem::path& entry,
                           const Policy& policy);

std::string report_json(const FindingReport& report);
std::string report_text(const FindingReport& report);

}  // namespace texguard::analyzer
