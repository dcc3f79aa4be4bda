#include <doctest.h>

#include <random>
#include <set>

#include "texguard/analyzer/analyzer.hpp"
#include "texguard/payload/payload.hpp"
#include "texguard/tex/lexer.hpp"

using namespace texguard;
using namespace texguard::payload;

namespace {

std::set<Category> analyzed_categories(const std::string& src) {
  std::set<Category> out;
  for (const auto& f : analyzer::analyze(tex::tokenize(src), src, analyzer::Policy{})) {
    if (f.category) out.insert(*f.category);
  }
  return out;
}

std::set<std::string> analyzed_rules(const std::string& src) {
  std::set<std::string> out;
  for (const auto& f : analyzer::analyze(tex::tokenize(src), src, analyzer::Policy{})) {
    out.insert(std::string(analyzer::rule_code(f.rule)));
  }
  return out;
}

std::size_t count(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos;
       pos = haystack.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("catalog shape") {
  const auto probes = list_probes();
  REQUIRE(probes.size() == 22);
  std::set<std::string> ids;
  std::set<Category> categories;
  for (const auto& p : probes) {
    CHECK(ids.insert(p.id).second);
    categories.insert(p.category);
  }
  CHECK(categories.size() == kCategoryCount);
  CHECK(probes.front().id == "users");
  CHECK(probes.back().id == "hosts_file");
  CHECK(probes.back().mechanism == Mechanism::FileRead);
  CHECK(probes.back().command_or_path == "/etc/hosts");
  CHECK(find_probe("debsecan")->command_or_path ==
        "debsecan | grep \"high urgency\" | grep \"remotely exploitable\"");
  CHECK(find_probe("nope") == nullptr);
}

TEST_CASE("uname with verbatim hiding reproduces the two-line listing") {
  PayloadSpec spec;
  spec.probes = {"uname"};
  spec.hiding = Hiding::Verbatim;
  const auto src = build_payload(spec);
  CHECK(src.find("\\immediate\\write18{uname -a >> output.txt}\n\\input{output.txt}\n") !=
        std::string::npos);
  CHECK(src.rfind(std::string(kBanner) + "\n", 0) == 0);
}

TEST_CASE("hosts file read without hiding") {
  PayloadSpec spec;
  spec.probes = {"hosts_file"};
  spec.hiding = Hiding::None;
  const auto src = build_payload(spec);
  CHECK(src.find("\\immediate\\input{/etc/hosts}") != std::string::npos);
  CHECK(src.find("write18") == std::string::npos);
  CHECK(analyzed_rules(src) == std::set<std::string>{"R2_FILE_READ", "R6_SENSITIVE_PATH"});
}

TEST_CASE("read loop variant") {
  PayloadSpec spec;
  spec.probes = {"hosts_file"};
  spec.read_mode = ReadMode::ReadLoop;
  const auto src = build_payload(spec);
  CHECK(src.find("\\immediate\\openin\\texguardin=/etc/hosts") != std::string::npos);
  CHECK(src.find("\\readline") != std::string::npos);
  CHECK(analyzed_categories(src) == std::set<Category>{Category::Hostnames});
}

TEST_CASE("hiding epilogues") {
  PayloadSpec spec;
  spec.probes = {"lscpu"};
  spec.hiding = Hiding::UnindexedStream;
  spec.compression_off = true;
  auto src = build_payload(spec);
  CHECK(src.find("\\immediate\\pdfobj file{output.txt}") != std::string::npos);
  CHECK(src.find("\\pdfcompresslevel=0\n\\pdfobjcompresslevel=0\n") != std::string::npos);

  spec.engine = Engine::LuaTex;
  src = build_payload(spec);
  CHECK(src.find("\\immediate\\pdfextension obj file{output.txt}") != std::string::npos);
  CHECK(src.find("\\pdfvariable compresslevel=0") != std::string::npos);
  CHECK(src.find("\\usepackage{shellesc}") != std::string::npos);

  spec.engine = Engine::PdfTex;
  spec.compression_off = false;
  spec.hiding = Hiding::WhiteText;
  src = build_payload(spec);
  CHECK(src.find("\\usepackage{xcolor}") != std::string::npos);
  CHECK(src.find("{\\color{white}\\input{output.txt}\\par}") != std::string::npos);
  CHECK(analyzed_rules(src).count("R5_HIDING"));
}

TEST_CASE("validation errors") {
  PayloadSpec spec;
  CHECK_THROWS_AS(build_payload(spec), PayloadError);
  spec.probes = {"bogus"};
  CHECK_THROWS_AS(build_payload(spec), PayloadError);
  spec.probes = {"uname"};
  spec.scratch_file = "/tmp/out.txt";
  CHECK_THROWS_AS(build_payload(spec), PayloadError);
  spec.scratch_file = "output.txt";
  spec.engine = Engine::Dvi;
  spec.hiding = Hiding::UnindexedStream;
  CHECK_THROWS_AS(build_payload(spec), PayloadError);
  spec.hiding = Hiding::WhiteText;
  CHECK_NOTHROW(build_payload(spec));
}

TEST_CASE("lua probes need luatex and the error names the probe") {
  const std::vector<ProbeSpec> catalog = {
      {"lua_uname", Category::System, Mechanism::Lua, "uname -a", EngineRequirement::LuaTex, {}}};
  PayloadSpec spec;
  spec.probes = {"lua_uname"};
  try {
    build_payload(spec, catalog);
    FAIL("expected an error");
  } catch (const PayloadError& e) {
    CHECK(std::string(e.what()).find("lua_uname") != std::string::npos);
  }
  spec.engine = Engine::LuaTex;
  const auto src = build_payload(spec, catalog);
  CHECK(src.find("\\directlua{os.execute([[uname -a >> output.txt]])}") != std::string::npos);
  CHECK(analyzed_categories(src) == std::set<Category>{Category::System});
  CHECK(analyzed_rules(src).count("R4_LUA_EXEC"));
}

TEST_CASE("style file mode") {
  PayloadSpec spec;
  spec.probes = {"users", "hosts_file"};
  spec.kind = DocumentKind::StyleFile;
  const auto src = build_payload(spec);
  CHECK(src.find("\\ProvidesPackage{texguard-payload}") != std::string::npos);
  CHECK(src.find("\\AtBeginDocument{%") != std::string::npos);
  CHECK(src.find("\\documentclass") == std::string::npos);
  CHECK(analyzed_categories(src) ==
        std::set<Category>{Category::UserGroupNames, Category::Hostnames});
}

TEST_CASE("file fallbacks read the routes of shell probes") {
  PayloadSpec spec;
  spec.probes = {"uname", "lscpu", "nmap"};
  spec.file_fallbacks = true;
  const auto src = build_payload(spec);
  CHECK(src.find("\\InputIfFileExists{/proc/version}{}{}") != std::string::npos);
  CHECK(src.find("\\InputIfFileExists{/proc/cpuinfo}{}{}") != std::string::npos);
  CHECK(count(src, "InputIfFileExists") == 2);
  CHECK(analyzed_categories(src) ==
        std::set<Category>{Category::System, Category::Cpu, Category::OpenPorts});
}

TEST_CASE("marker honesty and determinism") {
  PayloadSpec spec;
  spec.probes = {"users", "shadow", "hosts_file"};
  spec.hiding = Hiding::UnindexedStream;
  const auto with = build_payload(spec);
  CHECK(with == build_payload(spec));
  spec.marker = false;
  const auto without = build_payload(spec);
  CHECK(with == std::string(kBanner) + "\n" + without);
  CHECK(without.find("texguard red-team") == std::string::npos);
}

TEST_CASE("generator and analyzer agree on categories") {
  std::mt19937_64 rng(99);
  const auto probes = list_probes();
  for (int trial = 0; trial < 60; ++trial) {
    PayloadSpec spec;
    std::set<Category> expected;
    for (const auto& p : probes) {
      if (rng() % 4 == 0) {
        spec.probes.push_back(p.id);
        expected.insert(p.category);
      }
    }
    if (spec.probes.empty()) {
      spec.probes.push_back(probes[rng() % probes.size()].id);
      expected.insert(find_probe(spec.probes.back())->category);
    }
    spec.hiding = static_cast<Hiding>(rng() % 4);
    spec.engine = rng() % 2 ? Engine::PdfTex : Engine::LuaTex;
    spec.compression_off = rng() % 2;
    spec.read_mode = rng() % 2 ? ReadMode::Input : ReadMode::ReadLoop;
    spec.kind = rng() % 2 ? DocumentKind::Standalone : DocumentKind::StyleFile;
    spec.file_fallbacks = rng() % 2;
    spec.marker = rng() % 2;
    const auto src = build_payload(spec);
    INFO(src);
    CHECK(analyzed_categories(src) == expected);
  }
}
