#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "texguard/payload/payload.hpp"
#include "texguard/payload/probe.hpp"
#include "texguard/sim/profile.hpp"

namespace texguard::sim {

enum class OutcomeStatus {
  Success,
  SuccessSandboxScoped,
  BlockedShell,
  BlockedFileIo,
  BlockedLua,
  BlockedEngine,
  // Allowed by policy but the tool or file is missing or root-only.
  Unavailable,
};

std::string_view outcome_status_name(OutcomeStatus status);
bool is_success(OutcomeStatus status);

struct Outcome {
  OutcomeStatus status = OutcomeStatus::Unavailable;
  std::string explanation;
};

// `engine` is the compiling engine; nullopt means whatever the probe needs.
Outcome predict(const ServiceProfile& profile, const payload::ProbeSpec& probe,
                std::optional<payload::Engine> engine = std::nullopt);

CapabilityMatrix evaluate_payload(const ServiceProfile& profile, const payload::PayloadSpec& spec,
                                  std::span<const payload::ProbeSpec> catalog =
                                      payload::list_probes());

// Every catalog probe with file fallbacks on.
payload::PayloadSpec full_catalog_spec(std::span<const payload::ProbeSpec> catalog =
                                           payload::list_probes());

struct DiffRow {
  Category category;
  CellOutcome predicted;
  CellOutcome observed;
  bool match;
};

struct DiffReport {
  std::string service;
  std::vector<DiffRow> rows;

  std::size_t matched() const;
  double match_fraction() const;
};

struct MissingObservation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Sandbox scoping is not visible in an observation, so a scoped prediction
// matches an observed `obtained`. Throws MissingObservation.
DiffReport compare_to_observed(const CapabilityMatrix& predicted, const ServiceProfile& profile);

std::string matrix_text(const std::string& service, const CapabilityMatrix& matrix);
std::string diff_text(const DiffReport& diff);
std::string simulation_json(const std::string& service, const CapabilityMatrix& matrix,
                            const std::optional<DiffReport>& diff);

}  // namespace texguard::sim
