#include "texguard/analyzer/report.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "texguard/analyzer/analyzer.hpp"
#include "texguard/tex/lexer.hpp"
#include "texguard/tex/project.hpp"

namespace fs = std::filesystem;

namespace texguard::analyzer {

namespace {

constexpr int kReportVersion = 1;

std::vector<std::size_t> compute_line_starts(std::string_view source) {
  std::vector<std::size_t> starts{0};
  for (std::size_t i = 0; i < source.size(); ++i) {
    if (source[i] == '\n') {
      starts.push_back(i + 1);
    } else if (source[i] == '\r' && (i + 1 >= source.size() || source[i + 1] != '\n')) {
      starts.push_back(i + 1);
    }
  }
  return starts;
}

std::pair<std::size_t, std::size_t> line_column(const std::vector<std::size_t>& starts,
                                                std::size_t offset) {
  if (starts.empty()) return {1, offset + 1};
  const auto it = std::upper_bound(starts.begin(), starts.end(), offset);
  const std::size_t line = static_cast<std::size_t>(it - starts.begin());
  return {line, offset - starts[line - 1] + 1};
}

FileFindings scan_file(const fs::path& root, const std::string& relative, const Policy& policy) {
  try {
    const std::string source = read_file((root / relative).string());
    return scan_source(relative, source, policy);
  } catch (const std::exception& e) {
    FileFindings entry;
    entry.path = relative;
    entry.error = e.what();
    return entry;
  }
}

}  // namespace

std::size_t FindingReport::finding_count() const {
  std::size_t total = 0;
  for (const auto& file : files) total += file.findings.size();
  return total;
}

ReportSummary FindingReport::summary() const {
  ReportSummary summary;
  summary.files = files.size();
  std::set<Category> categories;
  for (const auto& file : files) {
    for (const auto& finding : file.findings) {
      ++summary.findings;
      ++summary.by_rule[std::string(rule_code(finding.rule))];
      ++summary.by_severity[std::string(severity_name(finding.severity))];
      ++summary.by_disposition[std::string(disposition_name(finding.disposition))];
      if (finding.category) categories.insert(*finding.category);
    }
  }
  summary.categories.assign(categories.begin(), categories.end());
  return summary;
}

FileFindings scan_source(std::string path, std::string_view source, const Policy& policy) {
  FileFindings entry;
  entry.path = std::move(path);
  const tex::TokenStream stream = tex::tokenize(source, entry.path);
  entry.findings = analyze(stream, source, policy);
  entry.line_starts = compute_line_starts(source);
  return entry;
}

FindingReport scan_project(const fs::path& root, const fs::path& entry, const Policy& policy) {
  FindingReport report;
  std::set<std::string> seen;

  if (!entry.empty()) {
    const tex::InputGraph graph = tex::resolve_project_inputs(entry, root);
    for (const auto& node : graph.nodes) {
      if (node.tag == tex::InputTag::External) continue;
      if (!seen.insert(node.path).second) continue;
      if (node.tag == tex::InputTag::Missing) {
        // Only the entry itself is worth reporting; missing includes are
        // ordinary in projects that generate files during the build.
        if (&node == &graph.nodes.front()) {
          report.files.push_back(FileFindings{node.path, {}, "file not found", {}});
        }
        continue;
      }
      report.files.push_back(scan_file(root, node.path, policy));
    }
  }

  std::vector<std::string> templates;
  std::error_code ec;
  for (fs::recursive_directory_iterator it(root, fs::directory_options::skip_permission_denied, ec),
       end;
       !ec && it != end; it.increment(ec)) {
    if (!it->is_regular_file(ec)) continue;
    const std::string ext = it->path().extension().string();
    if (ext != ".sty" && ext != ".cls") continue;
    templates.push_back(it->path().lexically_relative(root).generic_string());
  }
  std::sort(templates.begin(), templates.end());
  for (const auto& relative : templates) {
    if (!seen.insert(relative).second) continue;
    report.files.push_back(scan_file(root, relative, policy));
  }
  return report;
}

std::string report_json(const FindingReport& report) {
  using nlohmann::ordered_json;
  ordered_json files = ordered_json::array();
  for (const auto& file : report.files) {
    ordered_json findings = ordered_json::array();
    for (const auto& finding : file.findings) {
      ordered_json item;
      item["rule"] = rule_code(finding.rule);
      item["severity"] = severity_name(finding.severity);
      item["start"] = finding.span.begin;
      item["end"] = finding.span.end;
      item["evidence"] = escape_bytes(finding.evidence);
      item["disposition"] = disposition_name(finding.disposition);
      if (finding.category) item["category"] = category_name(*finding.category);
      findings.push_back(std::move(item));
    }
    ordered_json entry;
    entry["path"] = file.path;
    entry["findings"] = std::move(findings);
    if (file.error) entry["error"] = *file.error;
    files.push_back(std::move(entry));
  }
  const ReportSummary summary = report.summary();
  ordered_json categories = ordered_json::array();
  for (Category c : summary.categories) categories.push_back(category_name(c));
  ordered_json out;
  out["version"] = kReportVersion;
  out["files"] = std::move(files);
  out["summary"] = {{"files", summary.files},
                    {"findings", summary.findings},
                    {"by_rule", summary.by_rule},
                    {"by_severity", summary.by_severity},
                    {"by_disposition", summary.by_disposition},
                    {"categories", std::move(categories)}};
  return out.dump(2) + "\n";
}

std::string report_text(const FindingReport& report) {
  std::string out;
  for (const auto& file : report.files) {
    if (file.error) {
      out += file.path + ": error: " + *file.error + "\n";
      continue;
    }
    for (const auto& finding : file.findings) {
      const auto [line, column] = line_column(file.line_starts, finding.span.begin);
      out += file.path + ":" + std::to_string(line) + ":" + std::to_string(column) + ": ";
      out += std::string(severity_name(finding.severity)) + " ";
      out += std::string(rule_code(finding.rule)) + " [";
      out += std::string(disposition_name(finding.disposition)) + "]";
      if (finding.category) out += " (" + std::string(category_name(*finding.category)) + ")";
      out += " " + escape_bytes(finding.evidence, 120) + "\n";
    }
  }
  const ReportSummary summary = report.summary();
  out += std::to_string(summary.findings) + " finding(s) in " + std::to_string(summary.files) +
         " file(s)";
  if (!summary.by_severity.empty()) {
    out += ":";
    for (const auto& [name, count] : summary.by_severity) {
      out += " " + name + "=" + std::to_string(count);
    }
  }
  out += "\n";
  return out;
}

}  // namespace texguard::analyzer
