#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "texguard/payload/probe.hpp"

namespace texguard::payload {

enum class Hiding { UnindexedStream, WhiteText, Verbatim, None };
enum class Engine { PdfTex, LuaTex, Dvi };
enum class ReadMode { Input, ReadLoop };
enum class DocumentKind { Standalone, StyleFile };

std::string_view hiding_name(Hiding hiding);
std::string_view engine_name(Engine engine);
Hiding parse_hiding(std::string_view name);
Engine parse_engine(std::string_view name);

struct PayloadError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct PayloadSpec {
  std::vector<std::string> probes;  // probe ids
  Hiding hiding = Hiding::Verbatim;
  bool compression_off = false;
  Engine engine = Engine::PdfTex;
  bool marker = true;
  std::string scratch_file = "output.txt";
  ReadMode read_mode = ReadMode::Input;
  DocumentKind kind = DocumentKind::Standalone;
  // Also read the file route of each shell probe, for services that block
  // shell escape but not file input.
  bool file_fallbacks = false;
};

inline constexpr std::string_view kBanner =
    "% texguard red-team payload \xE2\x80\x94 authorized testing only";

// Throws PayloadError when `spec` is invalid for `catalog`.
void validate(const PayloadSpec& spec, std::span<const ProbeSpec> catalog = list_probes());

// Resolved probes of a valid spec, in spec order.
std::vector<const ProbeSpec*> resolve_probes(const PayloadSpec& spec,
                                             std::span<const ProbeSpec> catalog = list_probes());

// LaTeX source (or a package when kind is StyleFile). Pure text generation;
// nothing is executed.
std::string build_payload(const PayloadSpec& spec, std::span<const ProbeSpec> catalog = list_probes());

}  // namespace texguard::payload
