#include "texguard/payload/payload.hpp"

#include <algorithm>

namespace texguard::payload {

namespace {

constexpr std::string_view kReadStream = "\\texguardin";
constexpr std::string_view kReadLine = "\\texguardline";

bool is_plain_file_name(std::string_view name) {
  if (name.empty() || name == "." || name == "..") return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '.' ||
           c == '_' || c == '-';
  });
}

// TeX-special characters would change how the braces around a command parse.
bool is_tex_safe(std::string_view text) {
  return text.find_first_of("{}\\%\n\r") == std::string_view::npos;
}

bool engine_supports(Engine engine, EngineRequirement requirement) {
  switch (requirement) {
    case EngineRequirement::Any: return true;
    case EngineRequirement::PdfTex: return engine == Engine::PdfTex;
    case EngineRequirement::LuaTex: return engine == Engine::LuaTex;
  }
  return false;
}

class Writer {
 public:
  explicit Writer(const PayloadSpec& spec, const std::vector<const ProbeSpec*>& probes)
      : spec_(spec), probes_(probes) {}

  std::string run() {
    if (spec_.marker) line(kBanner);
    if (spec_.kind == DocumentKind::StyleFile) {
      line("\\NeedsTeXFormat{LaTeX2e}");
      line("\\ProvidesPackage{texguard-payload}");
      packages("\\RequirePackage");
      compression();
      line("\\AtBeginDocument{%");
      body();
      line("}");
    } else {
      line("\\documentclass{article}");
      packages("\\usepackage");
      compression();
      line("\\begin{document}");
      body();
      line("\\end{document}");
    }
    return std::move(out_);
  }

 private:
  void line(std::string_view text) {
    out_ += text;
    out_ += '\n';
  }

  bool has_mechanism(Mechanism mechanism) const {
    return std::any_of(probes_.begin(), probes_.end(),
                       [&](const ProbeSpec* p) { return p->mechanism == mechanism; });
  }

  void packages(std::string_view command) {
    if (spec_.hiding == Hiding::WhiteText) line(std::string(command) + "{xcolor}");
    if (spec_.engine == Engine::LuaTex && has_mechanism(Mechanism::Shell)) {
      line(std::string(command) + "{shellesc}");
    }
  }

  void compression() {
    if (!spec_.compression_off) return;
    if (spec_.engine == Engine::LuaTex) {
      line("\\pdfvariable compresslevel=0");
      line("\\pdfvariable objcompresslevel=0");
    } else {
      line("\\pdfcompresslevel=0");
      line("\\pdfobjcompresslevel=0");
    }
  }

  void read_file(std::string_view path, bool optional) {
    if (spec_.read_mode == ReadMode::Input) {
      if (optional) {
        line("\\InputIfFileExists{" + std::string(path) + "}{}{}");
      } else {
        line("\\immediate\\input{" + std::string(path) + "}");
      }
      return;
    }
    if (!read_stream_declared_) {
      line("\\newread" + std::string(kReadStream));
      read_stream_declared_ = true;
    }
    line("\\immediate\\openin" + std::string(kReadStream) + "=" + std::string(path));
    line("\\begingroup\\endlinechar=-1");
    line("\\loop\\unless\\ifeof" + std::string(kReadStream));
    line("\\readline" + std::string(kReadStream) + " to" + std::string(kReadLine));
    line(std::string(kReadLine) + "\\par");
    line("\\repeat");
    line("\\endgroup");
    line("\\closein" + std::string(kReadStream));
  }

  void body() {
    const std::string redirect = " >> " + spec_.scratch_file;
    for (const ProbeSpec* probe : probes_) {
      if (probe->mechanism == Mechanism::Shell) {
        line("\\immediate\\write18{" + probe->command_or_path + redirect + "}");
      } else if (probe->mechanism == Mechanism::Lua) {
        line("\\directlua{os.execute([[" + probe->command_or_path + redirect + "]])}");
      }
    }
    const bool white = spec_.hiding == Hiding::WhiteText;
    std::vector<std::pair<std::string, bool>> reads;
    for (const ProbeSpec* probe : probes_) {
      if (probe->mechanism == Mechanism::FileRead) reads.emplace_back(probe->command_or_path, false);
    }
    if (spec_.file_fallbacks) {
      for (const ProbeSpec* probe : probes_) {
        if (probe->mechanism != Mechanism::FileRead && probe->file_route) {
          reads.emplace_back(*probe->file_route, true);
        }
      }
    }
    if (white && !reads.empty()) line("{\\color{white}%");
    for (const auto& [path, optional] : reads) read_file(path, optional);
    if (white && !reads.empty()) line("\\par}");

    const bool scratch_used = has_mechanism(Mechanism::Shell) || has_mechanism(Mechanism::Lua);
    if (scratch_used) {
      switch (spec_.hiding) {
        case Hiding::UnindexedStream:
          if (spec_.engine == Engine::LuaTex) {
            line("\\immediate\\pdfextension obj file{" + spec_.scratch_file + "}");
          } else {
            line("\\immediate\\pdfobj file{" + spec_.scratch_file + "}");
          }
          break;
        case Hiding::WhiteText:
          line("{\\color{white}\\input{" + spec_.scratch_file + "}\\par}");
          break;
        case Hiding::Verbatim:
          line("\\input{" + spec_.scratch_file + "}");
          break;
        case Hiding::None:
          break;
      }
    }
    line("\\mbox{}");
  }

  const PayloadSpec& spec_;
  const std::vector<const ProbeSpec*>& probes_;
  std::string out_;
  bool read_stream_declared_ = false;
};

}  // namespace

std::string_view hiding_name(Hiding hiding) {
  switch (hiding) {
    case Hiding::UnindexedStream: return "unindexed_stream";
    case Hiding::WhiteText: return "white_text";
    case Hiding::Verbatim: return "verbatim";
    case Hiding::None: return "none";
  }
  return "";
}

std::string_view engine_name(Engine engine) {
  switch (engine) {
    case Engine::PdfTex: return "pdftex";
    case Engine::LuaTex: return "luatex";
    case Engine::Dvi: return "dvi";
  }
  return "";
}

Hiding parse_hiding(std::string_view name) {
  for (Hiding h : {Hiding::UnindexedStream, Hiding::WhiteText, Hiding::Verbatim, Hiding::None}) {
    if (hiding_name(h) == name) return h;
  }
  throw PayloadError("unknown hiding mode '" + std::string(name) + "'");
}

Engine parse_engine(std::string_view name) {
  for (Engine e : {Engine::PdfTex, Engine::LuaTex, Engine::Dvi}) {
    if (engine_name(e) == name) return e;
  }
  throw PayloadError("unknown engine '" + std::string(name) + "'");
}

std::vector<const ProbeSpec*> resolve_probes(const PayloadSpec& spec,
                                             std::span<const ProbeSpec> catalog) {
  std::vector<const ProbeSpec*> out;
  for (const auto& id : spec.probes) {
    const ProbeSpec* probe = find_probe(id, catalog);
    if (!probe) throw PayloadError("unknown probe '" + id + "'");
    out.push_back(probe);
  }
  return out;
}

void validate(const PayloadSpec& spec, std::span<const ProbeSpec> catalog) {
  if (spec.probes.empty()) throw PayloadError("payload needs at least one probe");
  if (!is_plain_file_name(spec.scratch_file)) {
    throw PayloadError("scratch file must be a plain file name, got '" + spec.scratch_file + "'");
  }
  if (spec.engine == Engine::Dvi && spec.hiding == Hiding::UnindexedStream) {
    throw PayloadError("unindexed_stream hiding needs direct PDF output, not DVI");
  }
  if (spec.engine == Engine::Dvi && spec.compression_off) {
    throw PayloadError("compression settings need direct PDF output, not DVI");
  }
  for (const ProbeSpec* probe : resolve_probes(spec, catalog)) {
    if (!is_tex_safe(probe->command_or_path)) {
      throw PayloadError("probe '" + probe->id + "' contains TeX special characters");
    }
    if (probe->mechanism == Mechanism::Lua && spec.engine != Engine::LuaTex) {
      throw PayloadError("probe '" + probe->id + "' needs luatex, engine is " +
                         std::string(engine_name(spec.engine)));
    }
    if (!engine_supports(spec.engine, probe->engine_requirement)) {
      throw PayloadError("probe '" + probe->id + "' needs " +
                         std::string(engine_requirement_name(probe->engine_requirement)) +
                         ", engine is " + std::string(engine_name(spec.engine)));
    }
  }
}

std::string build_payload(const PayloadSpec& spec, std::span<const ProbeSpec> catalog) {
  validate(spec, catalog);
  const auto probes = resolve_probes(spec, catalog);
  return Writer(spec, probes).run();
}

}  // namespace texguard::payload
