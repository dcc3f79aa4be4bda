#include "texguard/cli/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "texguard/analyzer/report.hpp"
#include "texguard/common/bytes.hpp"
#include "texguard/common/keyvalue.hpp"
#include "texguard/forensics/detectors.hpp"
#include "texguard/forensics/synth.hpp"
#include "texguard/payload/payload.hpp"
#include "texguard/sim/predict.hpp"

namespace fs = std::filesystem;

namespace texguard::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string read_input(const std::string& path, Io& io) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(io.in), std::istreambuf_iterator<char>());
  }
  return read_file(path);
}

void write_output(const std::string& path, std::string_view bytes, Io& io) {
  if (path == "-") {
    io.out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    io.out.flush();
  } else {
    write_file(path, bytes);
  }
}

void add_format(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

// Detector flags shared by scan-pdf and extract.
struct DetectorFlags {
  forensics::DetectorOptions options;
  bool no_unindexed = false;
  bool no_white_text = false;
  bool no_comments = false;
  bool no_post_eof = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--min-comment-len", options.min_comment_len,
                    "Comments must be longer than this to be reported")
        ->capture_default_str();
    cmd->add_option("--white-threshold", options.white_threshold,
                    "Fill colour component level counted as white")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    cmd->add_option("--printable-threshold", options.printable_threshold,
                    "Printable fraction classified as leaked text")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    cmd->add_flag("--no-unindexed", no_unindexed, "Skip the unindexed stream detector");
    cmd->add_flag("--no-white-text", no_white_text, "Skip the white text detector");
    cmd->add_flag("--no-comments", no_comments, "Skip the comment detector");
    cmd->add_flag("--no-post-eof", no_post_eof, "Skip the post-EOF detector");
  }

  forensics::DetectorOptions resolved() const {
    forensics::DetectorOptions out = options;
    out.unindexed = !no_unindexed;
    out.white_text = !no_white_text;
    out.comments = !no_comments;
    out.post_eof = !no_post_eof;
    return out;
  }
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  for (const auto& item : split(text, ',')) {
    const std::string_view name = trim(item);
    if (!name.empty()) out.emplace_back(name);
  }
  return out;
}

std::vector<std::string> all_probe_ids() {
  std::vector<std::string> out;
  for (const auto& probe : payload::list_probes()) out.push_back(probe.id);
  return out;
}

forensics::ScanReport scan_pdf_bytes(const std::string& name, const std::string& bytes,
                                     const forensics::DetectorOptions& options) {
  forensics::ScanReport report = forensics::scan_document(pdf::parse_pdf(bytes), options);
  report.file = name;
  return report;
}

// ---- scan-tex

struct ScanTexCommand {
  std::vector<std::string> inputs;
  std::string root;
  std::string policy_path;
  std::string format = "text";

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("scan-tex", "Analyze LaTeX projects for dangerous primitives");
    cmd->add_option("inputs", inputs, "Entry .tex files, or directories of templates")
        ->required();
    cmd->add_option("--root", root, "Project root (default: directory of each entry)");
    cmd->add_option("--policy", policy_path, "Restriction policy file")
        ->envname("TEXGUARD_POLICY");
    add_format(cmd, format);
  }

  int execute(Io& io) {
    analyzer::Policy policy;
    if (!policy_path.empty()) policy = analyzer::parse_policy(read_file(policy_path));
    analyzer::FindingReport merged;
    for (const auto& input : inputs) {
      const fs::path path(input);
      std::error_code ec;
      if (!fs::exists(path, ec)) throw UsageError("no such file: " + input);
      analyzer::FindingReport report;
      if (fs::is_directory(path, ec)) {
        report = analyzer::scan_project(root.empty() ? path : fs::path(root), {}, policy);
      } else {
        const fs::path project = root.empty() ? fs::absolute(path).parent_path() : fs::path(root);
        report = analyzer::scan_project(project, fs::absolute(path), policy);
      }
      for (auto& file : report.files) merged.files.push_back(std::move(file));
    }
    io.out << (format == "json" ? analyzer::report_json(merged) : analyzer::report_text(merged));
    return merged.finding_count() > 0 ? kExitFindings : kExitClean;
  }
};

// ---- scan-pdf

struct ScanPdfCommand {
  std::vector<std::string> inputs;
  std::string format = "text";
  DetectorFlags flags;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("scan-pdf", "Look for hidden data in PDF files");
    cmd->add_option("inputs", inputs, "PDF files, - for standard input")->required();
    add_format(cmd, format);
    flags.attach(cmd);
  }

  int execute(Io& io) {
    const auto options = flags.resolved();
    bool failed = false;
    bool found = false;
    nlohmann::ordered_json reports = nlohmann::ordered_json::array();
    for (const auto& input : inputs) {
      const std::string name = input == "-" ? "<stdin>" : input;
      try {
        const auto report = scan_pdf_bytes(name, read_input(input, io), options);
        found = found || !report.candidates.empty();
        if (format == "json") {
          reports.push_back(nlohmann::ordered_json::parse(forensics::scan_report_json(report)));
        } else {
          io.out << forensics::scan_report_text(report);
        }
      } catch (const std::exception& e) {
        io.err << "texguard: " << name << ": " << e.what() << "\n";
        failed = true;
      }
    }
    if (format == "json") {
      io.out << (reports.size() == 1 ? reports[0] : reports).dump(2) << "\n";
    }
    if (failed) return kExitError;
    return found ? kExitFindings : kExitClean;
  }
};

// ---- extract

struct ExtractCommand {
  std::string input;
  std::string id;
  std::string out_path = "-";
  std::string out_dir;
  DetectorFlags flags;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("extract", "Write the bytes of detected candidates");
    cmd->add_option("input", input, "PDF file, - for standard input")->required();
    auto* id_opt = cmd->add_option("--id", id, "Candidate id from scan-pdf (c1, c2, ...)");
    auto* dir_opt = cmd->add_option("--out-dir", out_dir, "Write every candidate as <id>.bin");
    cmd->add_option("--out", out_path, "Destination for --id, - for standard output")
        ->capture_default_str();
    id_opt->excludes(dir_opt);
    flags.attach(cmd);
  }

  int execute(Io& io) {
    if (id.empty() && out_dir.empty()) throw UsageError("extract needs --id or --out-dir");
    const auto report =
        scan_pdf_bytes(input == "-" ? "<stdin>" : input, read_input(input, io), flags.resolved());
    if (!out_dir.empty()) {
      fs::create_directories(out_dir);
      for (std::size_t i = 0; i < report.candidates.size(); ++i) {
        const std::string id_i = forensics::candidate_id(i);
        const fs::path dest = fs::path(out_dir) / (id_i + ".bin");
        const std::size_t n = forensics::extract(report.candidates[i], dest.string());
        io.err << id_i << ": " << n << " bytes -> " << dest.string() << "\n";
      }
      return kExitClean;
    }
    for (std::size_t i = 0; i < report.candidates.size(); ++i) {
      if (forensics::candidate_id(i) != id) continue;
      if (out_path == "-") {
        write_output("-", report.candidates[i].payload(), io);
      } else {
        forensics::extract(report.candidates[i], out_path);
      }
      return kExitClean;
    }
    throw UsageError("no candidate '" + id + "' (" + std::to_string(report.candidates.size()) +
                     " found)");
  }
};

// ---- gen-payload

struct GenPayloadCommand {
  std::string probes;
  std::string hiding = "verbatim";
  std::string engine = "pdftex";
  std::string read_mode = "input";
  std::string scratch = "output.txt";
  std::string out_path = "-";
  bool compression_off = false;
  bool no_marker = false;
  bool style_file = false;
  bool file_fallbacks = false;
  bool list = false;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("gen-payload", "Write a reconnaissance test document");
    cmd->add_option("--probes", probes, "Comma-separated probe ids (default: all)");
    cmd->add_option("--hiding", hiding, "unindexed_stream|white_text|verbatim|none")
        ->capture_default_str();
    cmd->add_option("--engine", engine, "pdftex|luatex|dvi")->capture_default_str();
    cmd->add_option("--read-mode", read_mode, "input|read_loop")->capture_default_str();
    cmd->add_option("--scratch", scratch, "Scratch file name")->capture_default_str();
    cmd->add_option("--out", out_path, "Destination, - for standard output")
        ->capture_default_str();
    cmd->add_flag("--compression-off", compression_off, "Set the PDF compression levels to 0");
    cmd->add_flag("--no-marker", no_marker, "Omit the red-team banner comment");
    cmd->add_flag("--style-file", style_file, "Emit a package instead of a document");
    cmd->add_flag("--file-fallbacks", file_fallbacks, "Also read the file route of shell probes");
    cmd->add_flag("--list-probes", list, "Print the probe catalog and exit");
  }

  int execute(Io& io) {
    if (list) {
      for (const auto& probe : payload::list_probes()) {
        io.out << probe.id << "\t" << category_name(probe.category) << "\t"
               << payload::mechanism_name(probe.mechanism) << "\t" << probe.command_or_path
               << "\n";
      }
      return kExitClean;
    }
    payload::PayloadSpec spec;
    spec.probes = probes.empty() ? all_probe_ids() : split_list(probes);
    spec.hiding = payload::parse_hiding(hiding);
    spec.engine = payload::parse_engine(engine);
    if (read_mode == "input") {
      spec.read_mode = payload::ReadMode::Input;
    } else if (read_mode == "read_loop") {
      spec.read_mode = payload::ReadMode::ReadLoop;
    } else {
      throw UsageError("unknown read mode '" + read_mode + "'");
    }
    spec.scratch_file = scratch;
    spec.compression_off = compression_off;
    spec.marker = !no_marker;
    spec.kind = style_file ? payload::DocumentKind::StyleFile : payload::DocumentKind::Standalone;
    spec.file_fallbacks = file_fallbacks;
    write_output(out_path, payload::build_payload(spec), io);
    return kExitClean;
  }
};

// ---- simulate

struct SimulateCommand {
  std::vector<std::string> profiles;
  std::string probes;
  std::string engine = "pdftex";
  std::string format = "text";
  bool no_file_fallbacks = false;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("simulate", "Predict what a payload obtains on a service");
    cmd->add_option("--profile", profiles, "Service profile file or directory of profiles")
        ->required();
    cmd->add_option("--probes", probes, "Comma-separated probe ids (default: all)");
    cmd->add_option("--engine", engine, "pdftex|luatex|dvi")->capture_default_str();
    cmd->add_flag("--no-file-fallbacks", no_file_fallbacks,
                  "Do not try the file route of blocked shell probes");
    add_format(cmd, format);
  }

  int execute(Io& io) {
    payload::PayloadSpec spec = sim::full_catalog_spec();
    if (!probes.empty()) spec.probes = split_list(probes);
    spec.engine = payload::parse_engine(engine);
    spec.file_fallbacks = !no_file_fallbacks;
    payload::validate(spec);

    std::vector<sim::ServiceProfile> loaded;
    for (const auto& path : profiles) {
      if (fs::is_directory(path)) {
        for (auto& p : sim::load_profiles(path)) loaded.push_back(std::move(p));
      } else {
        loaded.push_back(sim::load_profile(path));
      }
    }
    bool leaks = false;
    nlohmann::ordered_json all = nlohmann::ordered_json::array();
    for (const auto& profile : loaded) {
      const auto matrix = sim::evaluate_payload(profile, spec);
      for (Category c : kAllCategories) {
        leaks = leaks || matrix[c] == sim::CellOutcome::Obtained ||
                matrix[c] == sim::CellOutcome::ObtainedSandboxScoped;
      }
      std::optional<sim::DiffReport> diff;
      if (profile.observed) diff = sim::compare_to_observed(matrix, profile);
      if (format == "json") {
        all.push_back(nlohmann::ordered_json::parse(sim::simulation_json(profile.name, matrix, diff)));
      } else {
        io.out << (diff ? sim::diff_text(*diff) : sim::matrix_text(profile.name, matrix));
      }
    }
    if (format == "json") io.out << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
    return leaks ? kExitFindings : kExitClean;
  }
};

// ---- synth-fixture

struct SynthCommand {
  std::string channel = "unindexed_stream";
  std::string in_path = "-";
  std::string out_path = "-";
  std::string clean_dir;
  bool compress = false;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("synth-fixture", "Build a PDF hiding a payload");
    cmd->add_option("--channel", channel, "unindexed_stream|white_text|comment|post_eof")
        ->capture_default_str();
    cmd->add_option("--in", in_path, "Payload file, - for standard input")->capture_default_str();
    cmd->add_option("--out", out_path, "Destination, - for standard output")
        ->capture_default_str();
    cmd->add_flag("--compress", compress, "Deflate the carrying stream");
    cmd->add_option("--clean-corpus", clean_dir, "Write the benign corpus to this directory");
  }

  int execute(Io& io) {
    if (!clean_dir.empty()) {
      fs::create_directories(clean_dir);
      for (const auto& [name, bytes] : forensics::clean_corpus()) {
        write_file((fs::path(clean_dir) / (name + ".pdf")).string(), bytes);
      }
      return kExitClean;
    }
    const auto parsed = forensics::parse_channel(channel);
    if (!parsed) throw UsageError("unknown channel '" + channel + "'");
    forensics::SynthOptions options;
    options.channel = *parsed;
    options.compress = compress;
    write_output(out_path, forensics::synthesize_fixture(read_input(in_path, io), options), io);
    return kExitClean;
  }
};

// ---- integration

std::optional<fs::path> find_on_path(const std::string& name) {
  const char* path = std::getenv("PATH");
  if (!path) return std::nullopt;
  for (const auto& dir : split(path, ':')) {
    if (dir.empty()) continue;
    const fs::path candidate = fs::path(dir) / name;
    std::error_code ec;
    if (fs::is_regular_file(candidate, ec)) return candidate;
  }
  return std::nullopt;
}

std::string replace_all(std::string text, const std::string& from, const std::string& to) {
  for (auto pos = text.find(from); pos != std::string::npos; pos = text.find(from, pos + to.size())) {
    text.replace(pos, from.size(), to);
  }
  return text;
}

struct IntegrationCommand {
  std::string engine_binary = "pdflatex";
  std::string container;
  std::string probes = "uname";
  std::string hiding = "unindexed_stream";
  std::string work_dir;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand(
        "integration", "Compile a payload inside a container and scan the resulting PDF");
    cmd->add_option("--engine-binary", engine_binary, "TeX engine executable")
        ->capture_default_str();
    cmd->add_option("--container", container,
                    "Command prefix that runs its arguments in a container; {dir} is replaced by "
                    "the work directory");
    cmd->add_option("--probes", probes, "Comma-separated probe ids")->capture_default_str();
    cmd->add_option("--hiding", hiding, "Hiding mode of the payload")->capture_default_str();
    cmd->add_option("--work-dir", work_dir, "Directory for payload.tex and payload.pdf");
  }

  int execute(Io& io) {
    if (!find_on_path(engine_binary)) {
      io.out << "integration: skipped, " << engine_binary << " not found on PATH\n";
      return kExitClean;
    }
    if (container.empty()) {
      throw UsageError("integration compiles untrusted input and needs --container");
    }
    payload::PayloadSpec spec;
    spec.probes = split_list(probes);
    spec.hiding = payload::parse_hiding(hiding);
    const fs::path dir =
        work_dir.empty() ? fs::temp_directory_path() / "texguard-integration" : fs::path(work_dir);
    fs::create_directories(dir);
    write_file((dir / "payload.tex").string(), payload::build_payload(spec));
    const std::string command = replace_all(container, "{dir}", dir.string()) + " " +
                                engine_binary +
                                " -shell-escape -interaction=nonstopmode payload.tex";
    io.err << "integration: " << command << "\n";
    if (std::system(command.c_str()) != 0) io.err << "integration: engine reported errors\n";
    const fs::path pdf = dir / "payload.pdf";
    if (!fs::exists(pdf)) throw std::runtime_error("no PDF produced in " + dir.string());
    const auto report = scan_pdf_bytes(pdf.string(), read_file(pdf.string()), {});
    io.out << forensics::scan_report_text(report);
    return report.candidates.empty() ? kExitClean : kExitFindings;
  }
};

// Help of the subcommand being parsed, or of the whole program.
std::string usage(const CLI::App& app) {
  const auto subs = app.get_subcommands();
  return subs.empty() ? app.help() : subs.front()->help();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Io io{in, out, err};
  CLI::App app{"texguard: LaTeX and PDF exfiltration analysis"};
  app.name("texguard");
  app.require_subcommand(1);

  ScanTexCommand scan_tex;
  ScanPdfCommand scan_pdf;
  ExtractCommand extract;
  GenPayloadCommand gen_payload;
  SimulateCommand simulate;
  SynthCommand synth;
  IntegrationCommand integration;
  scan_tex.attach(app);
  scan_pdf.attach(app);
  extract.attach(app);
  gen_payload.attach(app);
  simulate.attach(app);
  synth.attach(app);
  integration.attach(app);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << usage(app);
    return kExitClean;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitClean;
  } catch (const CLI::ParseError& e) {
    err << "texguard: " << e.what() << "\n\n" << usage(app);
    return kExitError;
  }

  try {
    const std::string name = app.get_subcommands().front()->get_name();
    if (name == "scan-tex") return scan_tex.execute(io);
    if (name == "scan-pdf") return scan_pdf.execute(io);
    if (name == "extract") return extract.execute(io);
    if (name == "gen-payload") return gen_payload.execute(io);
    if (name == "simulate") return simulate.execute(io);
    if (name == "synth-fixture") return synth.execute(io);
    if (name == "integration") return integration.execute(io);
  } catch (const std::exception& e) {
    err << "texguard: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace texguard::cli
