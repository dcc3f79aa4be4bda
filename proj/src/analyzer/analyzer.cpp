#include "texguard/analyzer/analyzer.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdlib>

#include "texguard/analyzer/sensitive.hpp"
#include "texguard/tex/arguments.hpp"

namespace texguard::analyzer {

using tex::FileSyntax;
using tex::Token;
using tex::TokenKind;
using tex::TokenStream;

namespace {

constexpr std::size_t kNpos = static_cast<std::size_t>(-1);
constexpr std::size_t kEvidenceLimit = 512;
constexpr double kWhiteThreshold = 0.95;

enum class Capability { None, Shell, FileIo, Lua };

std::string clip(std::string_view text) {
  text = trim(text);
  if (text.size() <= kEvidenceLimit) return std::string(text);
  return std::string(text.substr(0, kEvidenceLimit)) + "...";
}

bool parse_number(std::string_view text, double& value) {
  text = trim(text);
  if (text.empty()) return false;
  const std::string owned(text);
  char* end = nullptr;
  value = std::strtod(owned.c_str(), &end);
  return end == owned.c_str() + owned.size();
}

// Evaluates an xcolor colour expression (`{white}`, `[rgb]{1,1,1}`, ...).
bool is_white_color(std::string_view model, std::string_view value) {
  model = trim(model);
  value = trim(value);
  if (model.empty()) return value == "white" || value == "White";
  std::vector<double> components;
  for (const auto& part : split(value, ',')) {
    double v = 0;
    if (model == "HTML") {
      std::string_view hex = trim(part);
      if (hex.size() != 6) return false;
      for (std::size_t i = 0; i < 6; i += 2) {
        unsigned byte = 0;
        auto [ptr, ec] = std::from_chars(hex.data() + i, hex.data() + i + 2, byte, 16);
        if (ec != std::errc() || ptr != hex.data() + i + 2) return false;
        components.push_back(byte / 255.0);
      }
      continue;
    }
    if (!parse_number(part, v)) return false;
    components.push_back(v);
  }
  auto all_at_least = [&](double threshold, double scale) {
    return !components.empty() && std::all_of(components.begin(), components.end(),
                                              [&](double c) { return c / scale >= threshold; });
  };
  if (model == "gray" || model == "Gray") {
    return components.size() == 1 && all_at_least(kWhiteThreshold, model == "Gray" ? 15.0 : 1.0);
  }
  if (model == "rgb") return components.size() == 3 && all_at_least(kWhiteThreshold, 1.0);
  if (model == "RGB") return components.size() == 3 && all_at_least(kWhiteThreshold, 255.0);
  if (model == "HTML") return components.size() == 3 && all_at_least(kWhiteThreshold, 1.0);
  if (model == "cmyk") {
    return components.size() == 4 &&
           std::all_of(components.begin(), components.end(),
                       [](double c) { return c <= 1.0 - kWhiteThreshold; });
  }
  return false;
}

// A string literal argument of a Lua call: "..", '..' or [[..]].
struct LuaString {
  std::size_t offset = 0;  // of the contents, within the body
  std::string text;
};

std::optional<LuaString> lua_string_argument(std::string_view body, std::size_t pos) {
  while (pos < body.size() && (body[pos] == ' ' || body[pos] == '\t' || body[pos] == '(' ||
                               body[pos] == '\n' || body[pos] == '\r')) {
    ++pos;
  }
  if (pos >= body.size()) return std::nullopt;
  const char open = body[pos];
  if (open == '"' || open == '\'') {
    LuaString result;
    result.offset = pos + 1;
    std::size_t i = pos + 1;
    while (i < body.size() && body[i] != open) {
      if (body[i] == '\\' && i + 1 < body.size()) ++i;
      result.text += body[i++];
    }
    return result;
  }
  if (open == '[') {
    std::size_t level_end = pos + 1;
    while (level_end < body.size() && body[level_end] == '=') ++level_end;
    if (level_end >= body.size() || body[level_end] != '[') return std::nullopt;
    const std::string close = "]" + std::string(level_end - pos - 1, '=') + "]";
    const std::size_t start = level_end + 1;
    const std::size_t end = body.find(close, start);
    LuaString result;
    result.offset = start;
    result.text = std::string(body.substr(start, end == std::string_view::npos ? end : end - start));
    return result;
  }
  return std::nullopt;
}

class RuleEngine {
 public:
  RuleEngine(const TokenStream& stream, std::string_view source, const Policy& policy)
      : stream_(stream), tokens_(stream.tokens), source_(source), policy_(policy) {}

  std::vector<Finding> run() {
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
      const Token& token = tokens_[i];
      if (token.kind != TokenKind::ControlWord) continue;
      const std::string& name = token.value;
      if (name == "write") {
        rule_write(i);
      } else if (name == "input" || name == "include" || name == "InputIfFileExists" ||
                 name == "verbatiminput" || name == "VerbatimInput") {
        rule_file_read(i, FileSyntax::Plain);
      } else if (name == "lstinputlisting") {
        rule_file_read(i, FileSyntax::Options);
      } else if (name == "openin") {
        rule_file_read(i, FileSyntax::StreamOpen);
      } else if (name == "openout") {
        rule_openout(i);
      } else if (name == "newwrite") {
        rule_newwrite(i);
      } else if (name == "directlua" || name == "luaexec" || name == "latelua" ||
                 name == "luadirect") {
        rule_lua_command(i);
      } else if (name == "begin") {
        rule_lua_environment(i);
      } else if (name == "pdfobj") {
        rule_pdfobj(i, i + 1);
      } else if (name == "pdfextension") {
        rule_pdfextension(i);
      } else if (name == "pdfcompresslevel" || name == "pdfobjcompresslevel") {
        rule_compress_level(i);
      } else if (name == "pdfvariable") {
        rule_pdfvariable(i);
      } else if (name == "color") {
        rule_color(i);
      } else if (name == "textcolor") {
        rule_textcolor(i);
      }
    }
    for (const ByteRange& range : stream_.catcode_overrides_seen) {
      std::size_t end = range.end;
      while (end < source_.size() && end - range.begin < 40 && source_[end] != '\n' &&
             source_[end] != '\r') {
        ++end;
      }
      const ByteRange span{range.begin, end};
      add(RuleId::Obfuscation, Severity::Medium, span, clip(span.slice(source_)), Capability::None,
          "catcode");
    }
    if (policy_.mode == PolicyMode::Whitelist) {
      for (const Token& token : tokens_) {
        if (token.kind != TokenKind::ControlWord) continue;
        if (policy_.allowed_commands.count(token.value)) continue;
        findings_.push_back(Finding{RuleId::NotAllowed, Severity::Info, token.span, token.value,
                                    Disposition::BlockedByPolicy, std::nullopt});
      }
    }
    std::stable_sort(findings_.begin(), findings_.end(), [](const Finding& a, const Finding& b) {
      if (a.span.begin != b.span.begin) return a.span.begin < b.span.begin;
      if (a.rule != b.rule) return a.rule < b.rule;
      return a.span.end < b.span.end;
    });
    return std::move(findings_);
  }

 private:
  Disposition disposition(Capability capability, std::string_view trigger) const {
    bool blocked = (capability == Capability::Shell && policy_.shell_escape_restricted) ||
                   (capability == Capability::FileIo && policy_.file_io_restricted) ||
                   (capability == Capability::Lua && policy_.luatex_restricted);
    if (policy_.mode == PolicyMode::Whitelist && !policy_.allowed_commands.count(std::string(trigger))) {
      blocked = true;
    }
    if (blocked) return Disposition::BlockedByPolicy;
    if (capability != Capability::None && is_confining(policy_.sandbox)) {
      return Disposition::SandboxContained;
    }
    return Disposition::Exploitable;
  }

  void add(RuleId rule, Severity severity, ByteRange span, std::string evidence,
           Capability capability, std::string_view trigger,
           std::optional<Category> category = std::nullopt) {
    findings_.push_back(Finding{rule, severity, span, std::move(evidence),
                                disposition(capability, trigger), category});
  }

  void add_sensitive(std::size_t base, const SensitiveMatch& match, Capability capability,
                     std::string_view trigger) {
    const ByteRange span{base + match.offset, base + match.offset + match.length};
    add(RuleId::SensitivePath, Severity::Critical, span, match.term, capability, trigger,
        match.category);
  }

  void scan_command(ByteRange text, Capability capability, std::string_view trigger) {
    for (const auto& match : classify_command(text.slice(source_))) {
      add_sensitive(text.begin, match, capability, trigger);
    }
  }

  // Start of the command including a directly preceding \immediate.
  std::size_t command_start(std::size_t i) const {
    const std::size_t prev = tex::previous_significant(stream_, i);
    if (prev != kNpos && tokens_[prev].is_word("immediate")) return tokens_[prev].span.begin;
    return tokens_[i].span.begin;
  }

  // Index of the first BeginGroup among the next `limit` significant tokens.
  std::size_t find_group(std::size_t from, int limit) const {
    std::size_t j = tex::next_significant(stream_, from);
    for (int step = 0; step < limit && j < tokens_.size(); ++step) {
      if (tokens_[j].kind == TokenKind::BeginGroup) return j;
      if (tokens_[j].kind == TokenKind::EndGroup) return kNpos;
      j = tex::next_significant(stream_, j + 1);
    }
    return kNpos;
  }

  void rule_write(std::size_t i) {
    const std::string& trigger = tokens_[i].value;
    const std::size_t j = tex::next_significant(stream_, i + 1);
    if (j >= tokens_.size()) return;
    const Token& target = tokens_[j];
    const std::size_t start = command_start(i);

    if (target.kind == TokenKind::Text) {
      std::string_view text = trim_left(target.value);
      std::size_t len = 0;
      if (len < text.size() && text[len] == '-') ++len;
      while (len < text.size() && text[len] >= '0' && text[len] <= '9') ++len;
      const std::string_view number = text.substr(0, len);
      if (number.empty() || number == "-") return;
      const long stream_number = std::strtol(std::string(number).c_str(), nullptr, 10);
      const std::size_t group = find_group(j + 1, 2);
      ByteRange span{start, target.span.end};
      ByteRange body{target.span.end, target.span.end};
      if (group != kNpos) {
        const auto arg = tex::read_group(stream_, group, source_.size());
        span.end = arg.outer.end;
        body = arg.inner;
      }
      if (stream_number == 18) {
        add(RuleId::ShellEscape, Severity::Critical, span, clip(body.slice(source_)),
            Capability::Shell, trigger);
        scan_command(body, Capability::Shell, trigger);
      } else if (stream_number >= 0 && stream_number <= 15) {
        add(RuleId::FileWrite, Severity::High, span, "stream " + std::string(number),
            Capability::FileIo, trigger);
      }
      return;
    }
    if (target.kind == TokenKind::ControlWord || target.kind == TokenKind::ControlSymbol) {
      const std::size_t group = find_group(j + 1, 2);
      ByteRange span{start, target.span.end};
      std::size_t designator_end = target.span.end;
      if (group != kNpos) {
        span.end = tex::read_group(stream_, group, source_.size()).outer.end;
        designator_end = tokens_[group].span.begin;
      }
      add(RuleId::FileWrite, Severity::High, span,
          clip(source_.substr(target.span.begin, designator_end - target.span.begin)),
          Capability::FileIo, trigger);
    }
  }

  void rule_file_read(std::size_t i, FileSyntax syntax) {
    const std::string& trigger = tokens_[i].value;
    const auto arg = tex::read_file_argument(stream_, source_, i, syntax);
    if (!arg) return;
    const PathClass cls = classify_path(arg->name);
    if (cls.kind == PathKind::ProjectRelative) return;
    const ByteRange span{command_start(i), arg->extent.end};
    add(RuleId::FileRead, cls.sensitive ? Severity::Critical : Severity::High, span,
        clip(arg->name), Capability::FileIo, trigger);
    if (cls.sensitive) {
      add(RuleId::SensitivePath, Severity::Critical, arg->span, arg->name, Capability::FileIo,
          trigger, cls.category);
    }
  }

  void rule_openout(std::size_t i) {
    const std::string& trigger = tokens_[i].value;
    const auto arg = tex::read_file_argument(stream_, source_, i, FileSyntax::StreamOpen);
    if (!arg) {
      add(RuleId::FileWrite, Severity::High, ByteRange{command_start(i), tokens_[i].span.end},
          "openout", Capability::FileIo, trigger);
      return;
    }
    add(RuleId::FileWrite, Severity::High, ByteRange{command_start(i), arg->extent.end},
        clip(arg->name), Capability::FileIo, trigger);
    const PathClass cls = classify_path(arg->name);
    if (cls.sensitive) {
      add(RuleId::SensitivePath, Severity::Critical, arg->span, arg->name, Capability::FileIo,
          trigger, cls.category);
    }
  }

  void rule_newwrite(std::size_t i) {
    const std::size_t j = tex::next_significant(stream_, i + 1);
    ByteRange span = tokens_[i].span;
    std::string evidence = "newwrite";
    if (j < tokens_.size() &&
        (tokens_[j].kind == TokenKind::ControlWord || tokens_[j].kind == TokenKind::ControlSymbol)) {
      span.end = tokens_[j].span.end;
      evidence = std::string(tokens_[j].span.slice(source_));
    }
    add(RuleId::FileWrite, Severity::High, span, evidence, Capability::FileIo, tokens_[i].value);
  }

  void scan_lua_body(ByteRange body, std::string_view trigger) {
    static constexpr std::array<std::string_view, 4> kCalls = {"os.execute", "io.popen", "io.open",
                                                               "os.getenv"};
    const std::string_view text = body.slice(source_);
    for (std::string_view call : kCalls) {
      for (std::size_t pos = text.find(call); pos != std::string_view::npos;
           pos = text.find(call, pos + call.size())) {
        const auto arg = lua_string_argument(text, pos + call.size());
        if (!arg) continue;
        const std::size_t base = body.begin + arg->offset;
        if (call == "os.execute" || call == "io.popen") {
          // Escapes inside the literal shift offsets; match against raw bytes.
          const ByteRange raw{base, std::min(body.end, base + arg->text.size())};
          scan_command(raw, Capability::Lua, trigger);
        } else if (call == "io.open") {
          const PathClass cls = classify_path(arg->text);
          if (cls.sensitive) {
            add(RuleId::SensitivePath, Severity::Critical,
                ByteRange{base, std::min(body.end, base + arg->text.size())}, arg->text,
                Capability::Lua, trigger, cls.category);
          }
        }
      }
    }
  }

  void rule_lua_command(std::size_t i) {
    const std::string& trigger = tokens_[i].value;
    const std::size_t group = find_group(i + 1, 3);
    if (group == kNpos) {
      add(RuleId::LuaExec, Severity::High, tokens_[i].span, trigger, Capability::Lua, trigger);
      return;
    }
    const auto arg = tex::read_group(stream_, group, source_.size());
    add(RuleId::LuaExec, Severity::High, ByteRange{command_start(i), arg.outer.end},
        clip(arg.inner.slice(source_)), Capability::Lua, trigger);
    scan_lua_body(arg.inner, trigger);
  }

  void rule_lua_environment(std::size_t i) {
    const std::size_t group = tex::next_significant(stream_, i + 1);
    if (group >= tokens_.size() || tokens_[group].kind != TokenKind::BeginGroup) return;
    const auto name_arg = tex::read_group(stream_, group, source_.size());
    const std::string_view env = trim(name_arg.inner.slice(source_));
    if (env != "luacode" && env != "luacode*" && env != "luaexec") return;
    const std::string end_marker = "\\end{" + std::string(env) + "}";
    std::size_t body_end = source_.find(end_marker, name_arg.outer.end);
    std::size_t span_end = source_.size();
    if (body_end == std::string_view::npos) {
      body_end = source_.size();
    } else {
      span_end = body_end + end_marker.size();
    }
    const ByteRange body{name_arg.outer.end, body_end};
    add(RuleId::LuaExec, Severity::High, ByteRange{tokens_[i].span.begin, span_end},
        clip(body.slice(source_)), Capability::Lua, "begin");
    scan_lua_body(body, "begin");
  }

  // `from` is the first token after the object keyword.
  void rule_pdfobj(std::size_t i, std::size_t from) {
    const std::string& trigger = tokens_[i].value;
    bool file_keyword = false;
    std::size_t group = kNpos;
    std::size_t j = tex::next_significant(stream_, from);
    for (int step = 0; step < 8 && j < tokens_.size(); ++step) {
      const Token& t = tokens_[j];
      if (t.kind == TokenKind::BeginGroup) {
        group = j;
        break;
      }
      if (t.is_word("file")) file_keyword = true;
      if (t.kind == TokenKind::Text) {
        for (const auto& word : split(t.value, ' ')) {
          if (trim(word) == "file") file_keyword = true;
        }
      }
      if (t.kind == TokenKind::EndGroup) break;
      j = tex::next_significant(stream_, j + 1);
    }
    if (group == kNpos) {
      add(RuleId::Hiding, Severity::High, ByteRange{command_start(i), tokens_[i].span.end},
          "pdfobj", Capability::None, trigger);
      return;
    }
    const auto arg = tex::read_group(stream_, group, source_.size());
    const ByteRange span{command_start(i), arg.outer.end};
    const std::string_view inner = arg.inner.slice(source_);
    add(RuleId::Hiding, Severity::High, span, clip(inner), Capability::None, trigger);
    if (!file_keyword) return;
    const std::string_view name = trim(inner);
    if (name.empty()) return;
    const PathClass cls = classify_path(name);
    if (cls.kind == PathKind::ProjectRelative) return;
    const std::size_t lead = inner.size() - trim_left(inner).size();
    const ByteRange name_span{arg.inner.begin + lead, arg.inner.begin + lead + name.size()};
    add(RuleId::FileRead, cls.sensitive ? Severity::Critical : Severity::High, span,
        std::string(name), Capability::FileIo, trigger);
    if (cls.sensitive) {
      add(RuleId::SensitivePath, Severity::Critical, name_span, std::string(name),
          Capability::FileIo, trigger, cls.category);
    }
  }

  void rule_pdfextension(std::size_t i) {
    const std::size_t j = tex::next_significant(stream_, i + 1);
    if (j >= tokens_.size() || tokens_[j].kind != TokenKind::Text) return;
    const std::string_view text = trim_left(tokens_[j].value);
    if (text.rfind("obj", 0) != 0) return;
    if (text.size() > 3 && text[3] != ' ' && text[3] != '\t') return;
    rule_pdfobj(i, j);
  }

  // Parses `<spaces>[=]<spaces><integer>` and reports whether it is zero.
  static bool assigns_zero(std::string_view text, std::size_t& consumed) {
    std::size_t pos = 0;
    auto skip = [&] {
      while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    skip();
    if (pos < text.size() && text[pos] == '=') ++pos;
    skip();
    const std::size_t digits = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == digits) return false;
    consumed = pos;
    return std::strtol(std::string(text.substr(digits, pos - digits)).c_str(), nullptr, 10) == 0;
  }

  void rule_compress_level(std::size_t i) {
    if (i + 1 >= tokens_.size() || tokens_[i + 1].kind != TokenKind::Text) return;
    std::size_t consumed = 0;
    if (!assigns_zero(tokens_[i + 1].value, consumed)) return;
    const ByteRange span{tokens_[i].span.begin, tokens_[i + 1].span.begin + consumed};
    add(RuleId::Hiding, Severity::High, span, tokens_[i].value + "=0", Capability::None,
        tokens_[i].value);
  }

  void rule_pdfvariable(std::size_t i) {
    const std::size_t j = tex::next_significant(stream_, i + 1);
    if (j >= tokens_.size() || tokens_[j].kind != TokenKind::Text) return;
    const std::string& run = tokens_[j].value;
    const std::string_view text = trim_left(run);
    const std::size_t lead = run.size() - text.size();
    for (std::string_view key : {std::string_view("objcompresslevel"), std::string_view("compresslevel")}) {
      if (text.rfind(key, 0) != 0) continue;
      std::size_t consumed = 0;
      if (!assigns_zero(text.substr(key.size()), consumed)) return;
      const ByteRange span{tokens_[i].span.begin,
                           tokens_[j].span.begin + lead + key.size() + consumed};
      add(RuleId::Hiding, Severity::High, span, "pdfvariable " + std::string(key) + "=0",
          Capability::None, tokens_[i].value);
      return;
    }
  }

  struct ColorSpec {
    bool white = false;
    std::size_t next = 0;  // token after the colour argument
  };

  std::optional<ColorSpec> read_color(std::size_t i) const {
    std::size_t j = tex::next_significant(stream_, i + 1);
    std::string model;
    if (j < tokens_.size() && tokens_[j].kind == TokenKind::Text) {
      const std::string_view text = trim_left(tokens_[j].value);
      if (text.empty() || text.front() != '[') return std::nullopt;
      const std::size_t close = text.find(']');
      if (close == std::string_view::npos) return std::nullopt;
      model = std::string(text.substr(1, close - 1));
      j = tex::next_significant(stream_, j + 1);
    }
    if (j >= tokens_.size() || tokens_[j].kind != TokenKind::BeginGroup) return std::nullopt;
    const auto arg = tex::read_group(stream_, j, source_.size());
    return ColorSpec{is_white_color(model, arg.inner.slice(source_)), arg.next};
  }

  // `\color{white}` colours the rest of the enclosing group.
  void rule_color(std::size_t i) {
    const auto spec = read_color(i);
    if (!spec || !spec->white) return;
    int depth = 0;
    std::size_t end = source_.size();
    for (std::size_t k = spec->next; k < tokens_.size(); ++k) {
      if (tokens_[k].kind == TokenKind::BeginGroup) {
        ++depth;
      } else if (tokens_[k].kind == TokenKind::EndGroup) {
        if (depth == 0) {
          end = tokens_[k].span.begin;
          break;
        }
        --depth;
      } else if (tokens_[k].is_word("end") && depth == 0) {
        // An environment closing ends the colour scope as well.
        end = tokens_[k].span.begin;
        break;
      }
    }
    const std::size_t begin = spec->next < tokens_.size() ? tokens_[spec->next].span.begin : end;
    if (begin >= end) return;
    const std::string_view content = source_.substr(begin, end - begin);
    if (trim(content).empty()) return;
    add(RuleId::Hiding, Severity::High, ByteRange{tokens_[i].span.begin, end}, clip(content),
        Capability::None, tokens_[i].value);
  }

  void rule_textcolor(std::size_t i) {
    const auto spec = read_color(i);
    if (!spec || !spec->white) return;
    const std::size_t j = tex::next_significant(stream_, spec->next);
    if (j >= tokens_.size() || tokens_[j].kind != TokenKind::BeginGroup) return;
    const auto arg = tex::read_group(stream_, j, source_.size());
    const std::string_view content = arg.inner.slice(source_);
    if (trim(content).empty()) return;
    add(RuleId::Hiding, Severity::High, ByteRange{tokens_[i].span.begin, arg.outer.end},
        clip(content), Capability::None, tokens_[i].value);
  }

  const TokenStream& stream_;
  const std::vector<Token>& tokens_;
  std::string_view source_;
  const Policy& policy_;
  std::vector<Finding> findings_;
};

}  // namespace

std::string_view rule_code(RuleId rule) {
  switch (rule) {
    case RuleId::ShellEscape: return "R1_SHELL_ESCAPE";
    case RuleId::FileRead: return "R2_FILE_READ";
    case RuleId::FileWrite: return "R3_FILE_WRITE";
    case RuleId::LuaExec: return "R4_LUA_EXEC";
    case RuleId::Hiding: return "R5_HIDING";
    case RuleId::SensitivePath: return "R6_SENSITIVE_PATH";
    case RuleId::Obfuscation: return "R7_OBFUSCATION";
    case RuleId::NotAllowed: return "W1_NOT_ALLOWED";
  }
  return "";
}

std::optional<RuleId> parse_rule_code(std::string_view code) {
  for (RuleId rule : {RuleId::ShellEscape, RuleId::FileRead, RuleId::FileWrite, RuleId::LuaExec,
                      RuleId::Hiding, RuleId::SensitivePath, RuleId::Obfuscation,
                      RuleId::NotAllowed}) {
    const std::string_view full = rule_code(rule);
    if (code == full || code == full.substr(0, full.find('_'))) return rule;
  }
  return std::nullopt;
}

std::string_view severity_name(Severity severity) {
  switch (severity) {
    case Severity::Critical: return "critical";
    case Severity::High: return "high";
    case Severity::Medium: return "medium";
    case Severity::Info: return "info";
  }
  return "";
}

std::string_view disposition_name(Disposition disposition) {
  switch (disposition) {
    case Disposition::Exploitable: return "exploitable";
    case Disposition::BlockedByPolicy: return "blocked_by_policy";
    case Disposition::SandboxContained: return "sandbox_contained";
  }
  return "";
}

std::vector<Finding> analyze(const TokenStream& stream, std::string_view source,
                             const Policy& policy) {
  return RuleEngine(stream, source, policy).run();
}

}  // namespace texguard::analyzer
