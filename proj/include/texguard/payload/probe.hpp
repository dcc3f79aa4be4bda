#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "texguard/common/category.hpp"

namespace texguard::payload {

enum class Mechanism { Shell, FileRead, Lua };
enum class EngineRequirement { Any, PdfTex, LuaTex };

std::string_view mechanism_name(Mechanism mechanism);
std::string_view engine_requirement_name(EngineRequirement requirement);

// One information-gathering probe.
struct ProbeSpec {
  std::string id;
  Category category;
  Mechanism mechanism;
  std::string command_or_path;  // shell or Lua command line, or a path for file_read
  EngineRequirement engine_requirement = EngineRequirement::Any;
  // A file that yields the same category without a shell, for shell probes
  // that merely print a file (or a /proc equivalent).
  std::optional<std::string> file_route;
};

// The 22 published reconnaissance probes, in publication order.
std::span<const ProbeSpec> list_probes();

const ProbeSpec* find_probe(std::string_view id, std::span<const ProbeSpec> catalog = list_probes());

}  // namespace texguard::payload
