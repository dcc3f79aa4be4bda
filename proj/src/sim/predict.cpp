#include "texguard/sim/predict.hpp"

#include <fnmatch.h>

#include <cstdio>

#include <json.hpp>

#include "texguard/common/bytes.hpp"

namespace texguard::sim {

namespace {

using payload::EngineRequirement;
using payload::Mechanism;

bool matches_any(const std::set<std::string>& patterns, const std::string& path) {
  for (const auto& pattern : patterns) {
    if (pattern == path || fnmatch(pattern.c_str(), path.c_str(), FNM_PATHNAME) == 0) return true;
  }
  return false;
}

std::optional<std::string> file_problem(const Environment& env, const std::string& path) {
  if (matches_any(env.absent_files, path)) return path + " does not exist";
  if (!env.privileged && matches_any(env.root_only_files, path)) {
    return path + " is readable by root only";
  }
  return std::nullopt;
}

std::vector<std::string> words(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    if (i >= text.size()) break;
    std::string word;
    if (text[i] == '"' || text[i] == '\'') {
      const char quote = text[i++];
      while (i < text.size() && text[i] != quote) word += text[i++];
      if (i < text.size()) ++i;
    } else {
      while (i < text.size() && text[i] != ' ' && text[i] != '\t') word += text[i++];
    }
    out.push_back(std::move(word));
  }
  return out;
}

// Walks every stage of a pipeline; `cat` arguments are checked as files.
std::optional<std::string> command_problem(const Environment& env, std::string_view command) {
  for (const auto& stage : split(command, '|')) {
    const auto argv = words(stage);
    if (argv.empty()) continue;
    std::string tool = argv.front();
    if (const auto slash = tool.rfind('/'); slash != std::string::npos) tool.erase(0, slash + 1);
    if (env.absent_tools.count(tool)) return tool + " is not installed";
    if (!env.privileged && env.root_only_tools.count(tool)) return tool + " needs root";
    if (tool == "cat") {
      for (std::size_t i = 1; i < argv.size(); ++i) {
        if (argv[i].starts_with("-")) continue;
        if (auto problem = file_problem(env, argv[i])) return problem;
      }
    }
  }
  return std::nullopt;
}

std::optional<Outcome> engine_block(const payload::ProbeSpec& probe,
                                    std::optional<payload::Engine> engine) {
  if (!engine) return std::nullopt;
  const bool lua_needed =
      probe.mechanism == Mechanism::Lua || probe.engine_requirement == EngineRequirement::LuaTex;
  if (lua_needed && *engine != payload::Engine::LuaTex) {
    return Outcome{OutcomeStatus::BlockedEngine,
                   "needs LuaTeX, document compiled with " +
                       std::string(payload::engine_name(*engine))};
  }
  if (probe.engine_requirement == EngineRequirement::PdfTex && *engine != payload::Engine::PdfTex) {
    return Outcome{OutcomeStatus::BlockedEngine,
                   "needs pdfTeX, document compiled with " +
                       std::string(payload::engine_name(*engine))};
  }
  return std::nullopt;
}

int rank(CellOutcome cell) {
  switch (cell) {
    case CellOutcome::Obtained:
    case CellOutcome::ObtainedSandboxScoped: return 2;
    case CellOutcome::Blocked: return 1;
    case CellOutcome::Unknown: return 0;
  }
  return 0;
}

CellOutcome to_cell(OutcomeStatus status) {
  switch (status) {
    case OutcomeStatus::Success: return CellOutcome::Obtained;
    case OutcomeStatus::SuccessSandboxScoped: return CellOutcome::ObtainedSandboxScoped;
    default: return CellOutcome::Blocked;
  }
}

bool obtained(CellOutcome cell) { return rank(cell) == 2; }

std::string format_fraction(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", value);
  return buf;
}

}  // namespace

std::string_view outcome_status_name(OutcomeStatus status) {
  switch (status) {
    case OutcomeStatus::Success: return "success";
    case OutcomeStatus::SuccessSandboxScoped: return "success_sandbox_scoped";
    case OutcomeStatus::BlockedShell: return "blocked_shell";
    case OutcomeStatus::BlockedFileIo: return "blocked_file_io";
    case OutcomeStatus::BlockedLua: return "blocked_lua";
    case OutcomeStatus::BlockedEngine: return "blocked_engine";
    case OutcomeStatus::Unavailable: return "unavailable";
  }
  return "";
}

bool is_success(OutcomeStatus status) {
  return status == OutcomeStatus::Success || status == OutcomeStatus::SuccessSandboxScoped;
}

Outcome predict(const ServiceProfile& profile, const payload::ProbeSpec& probe,
                std::optional<payload::Engine> engine) {
  const analyzer::Policy& policy = profile.policy;
  const Environment& env = profile.environment;
  std::optional<std::string> problem;
  switch (probe.mechanism) {
    case Mechanism::Shell:
      if (policy.shell_escape_restricted) {
        return {OutcomeStatus::BlockedShell, "shell_escape_restricted: \\write18 is disabled"};
      }
      if (auto blocked = engine_block(probe, engine)) return *blocked;
      problem = command_problem(env, probe.command_or_path);
      break;
    case Mechanism::FileRead:
      if (policy.file_io_restricted) {
        return {OutcomeStatus::BlockedFileIo,
                "file_io_restricted: reading " + probe.command_or_path + " is refused"};
      }
      if (auto blocked = engine_block(probe, engine)) return *blocked;
      problem = file_problem(env, probe.command_or_path);
      break;
    case Mechanism::Lua:
      if (policy.luatex_restricted) {
        return {OutcomeStatus::BlockedLua, "luatex_restricted: Lua execution is disabled"};
      }
      if (auto blocked = engine_block(probe, engine)) return *blocked;
      break;
  }
  if (problem) {
    return {OutcomeStatus::Unavailable, *problem + " in the " + env.preset + " environment"};
  }
  if (analyzer::is_confining(policy.sandbox)) {
    return {OutcomeStatus::SuccessSandboxScoped,
            "runs inside the " + std::string(analyzer::sandbox_name(policy.sandbox)) +
                " sandbox, output describes the sandbox only"};
  }
  return {OutcomeStatus::Success, "no restriction applies"};
}

CapabilityMatrix evaluate_payload(const ServiceProfile& profile, const payload::PayloadSpec& spec,
                                  std::span<const payload::ProbeSpec> catalog) {
  CapabilityMatrix matrix;
  for (const payload::ProbeSpec* probe : payload::resolve_probes(spec, catalog)) {
    Outcome outcome = predict(profile, *probe, spec.engine);
    if (!is_success(outcome.status) && spec.file_fallbacks &&
        probe->mechanism == Mechanism::Shell && probe->file_route) {
      payload::ProbeSpec route = *probe;
      route.mechanism = Mechanism::FileRead;
      route.command_or_path = *probe->file_route;
      route.file_route.reset();
      Outcome alternative = predict(profile, route, spec.engine);
      if (is_success(alternative.status)) outcome = std::move(alternative);
    }
    const CellOutcome cell = to_cell(outcome.status);
    if (rank(cell) > rank(matrix[probe->category])) matrix[probe->category] = cell;
  }
  return matrix;
}

payload::PayloadSpec full_catalog_spec(std::span<const payload::ProbeSpec> catalog) {
  payload::PayloadSpec spec;
  for (const auto& probe : catalog) spec.probes.push_back(probe.id);
  spec.file_fallbacks = true;
  return spec;
}

std::size_t DiffReport::matched() const {
  std::size_t n = 0;
  for (const auto& row : rows) n += row.match ? 1 : 0;
  return n;
}

double DiffReport::match_fraction() const {
  return rows.empty() ? 0.0 : static_cast<double>(matched()) / static_cast<double>(rows.size());
}

DiffReport compare_to_observed(const CapabilityMatrix& predicted, const ServiceProfile& profile) {
  if (!profile.observed) {
    throw MissingObservation(profile.name + " has no observed leak matrix");
  }
  DiffReport diff;
  diff.service = profile.name;
  for (Category c : kAllCategories) {
    const CellOutcome p = predicted[c];
    const CellOutcome o = (*profile.observed)[c];
    const bool match = p == o || (obtained(p) && obtained(o));
    diff.rows.push_back({c, p, o, match});
  }
  return diff;
}

std::string matrix_text(const std::string& service, const CapabilityMatrix& matrix) {
  std::size_t width = 0;
  for (Category c : kAllCategories) width = std::max(width, category_name(c).size());
  std::string out = service + "\n";
  for (Category c : kAllCategories) {
    const std::string name(category_name(c));
    out += "  " + name + std::string(width - name.size() + 2, ' ') +
           std::string(cell_outcome_name(matrix[c])) + "\n";
  }
  return out;
}

std::string diff_text(const DiffReport& diff) {
  std::size_t width = 0;
  for (const auto& row : diff.rows) width = std::max(width, category_name(row.category).size());
  std::string out = diff.service + " vs observed\n";
  for (const auto& row : diff.rows) {
    const std::string name(category_name(row.category));
    std::string predicted(cell_outcome_name(row.predicted));
    predicted.resize(std::max<std::size_t>(predicted.size(), 24), ' ');
    out += std::string(row.match ? "  " : "! ") + name + std::string(width - name.size() + 2, ' ') +
           predicted + "  " + std::string(cell_outcome_name(row.observed)) + "\n";
  }
  out += "matched " + std::to_string(diff.matched()) + "/" + std::to_string(diff.rows.size()) +
         " (" + format_fraction(diff.match_fraction()) + ")\n";
  return out;
}

std::string simulation_json(const std::string& service, const CapabilityMatrix& matrix,
                            const std::optional<DiffReport>& diff) {
  using nlohmann::ordered_json;
  ordered_json cells = ordered_json::object();
  for (Category c : kAllCategories) {
    cells[std::string(category_name(c))] = cell_outcome_name(matrix[c]);
  }
  ordered_json out;
  out["service"] = service;
  out["label"] = matrix.label;
  out["predicted"] = std::move(cells);
  if (diff) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : diff->rows) {
      rows.push_back({{"category", category_name(row.category)},
                      {"predicted", cell_outcome_name(row.predicted)},
                      {"observed", cell_outcome_name(row.observed)},
                      {"match", row.match}});
    }
    out["comparison"] = {{"rows", std::move(rows)},
                         {"matched", diff->matched()},
                         {"total", diff->rows.size()},
                         {"fraction", std::stod(format_fraction(diff->match_fraction()))}};
  }
  return out.dump(2) + "\n";
}

}  // namespace texguard::sim
