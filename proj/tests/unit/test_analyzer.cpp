#include <doctest.h>

#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "test_support.hpp"
#include "texguard/analyzer/analyzer.hpp"
#include "texguard/analyzer/report.hpp"
#include "texguard/analyzer/sensitive.hpp"
#include "texguard/tex/lexer.hpp"

using namespace texguard;
using namespace texguard::analyzer;
namespace fs = std::filesystem;

namespace {

std::vector<Finding> run(const std::string& src, const Policy& policy = {}) {
  return analyze(tex::tokenize(src), src, policy);
}

std::set<std::string> rules_of(const std::vector<Finding>& findings) {
  std::set<std::string> out;
  for (const auto& f : findings) out.insert(std::string(rule_code(f.rule)));
  return out;
}

std::set<Category> categories_of(const std::vector<Finding>& findings) {
  std::set<Category> out;
  for (const auto& f : findings) {
    if (f.category) out.insert(*f.category);
  }
  return out;
}

}  // namespace

TEST_CASE("reading the shadow file") {
  const auto f = run("\\input{/etc/shadow}");
  REQUIRE(f.size() == 2);
  CHECK(f[0].rule == RuleId::FileRead);
  CHECK(f[0].severity == Severity::Critical);
  CHECK(f[0].evidence == "/etc/shadow");
  CHECK(f[1].rule == RuleId::SensitivePath);
  CHECK(f[1].severity == Severity::Critical);
  CHECK(f[1].category == Category::Passwords);
  CHECK(f[1].span == ByteRange{7, 18});
}

TEST_CASE("benign document has no findings") {
  CHECK(run("\\documentclass{article}\\begin{document}hi\\end{document}").empty());
  CHECK(run("\\input{chapter1}\\include{sections/intro}").empty());
}

TEST_CASE("pdfobj from a file") {
  const auto f = run("\\immediate\\pdfobj \\file{input.txt}");
  REQUIRE(f.size() == 1);
  CHECK(f[0].rule == RuleId::Hiding);
  CHECK(f[0].severity == Severity::High);
  CHECK(f[0].evidence == "input.txt");
  CHECK(f[0].span.begin == 0);
}

TEST_CASE("pdfobj reading outside the project also counts as a read") {
  const auto f = run("\\immediate\\pdfobj file{/etc/hosts}");
  CHECK(rules_of(f) == std::set<std::string>{"R2_FILE_READ", "R5_HIDING", "R6_SENSITIVE_PATH"});
}

TEST_CASE("restricted shell escape is kept but blocked") {
  Policy policy;
  policy.shell_escape_restricted = true;
  const auto f = run("\\immediate\\write18{cat /etc/passwd >> output.txt}", policy);
  REQUIRE(f.size() == 2);
  CHECK(f[0].rule == RuleId::ShellEscape);
  CHECK(f[0].disposition == Disposition::BlockedByPolicy);
  CHECK(f[0].evidence == "cat /etc/passwd >> output.txt");
  CHECK(f[1].rule == RuleId::SensitivePath);
  CHECK(f[1].category == Category::UserGroupNames);
  CHECK(f[1].disposition == Disposition::BlockedByPolicy);
}

TEST_CASE("sandbox contains capabilities but not hiding") {
  Policy policy;
  policy.sandbox = SandboxKind::Docker;
  const auto f = run("\\immediate\\write18{uname -a >> o.txt}\\pdfcompresslevel=0", policy);
  REQUIRE(f.size() == 3);
  CHECK(f[0].disposition == Disposition::SandboxContained);
  CHECK(f[1].disposition == Disposition::SandboxContained);
  CHECK(f[2].rule == RuleId::Hiding);
  CHECK(f[2].disposition == Disposition::Exploitable);
  policy.sandbox = SandboxKind::Unknown;
  CHECK(run("\\write18{id}", policy)[0].disposition == Disposition::Exploitable);
}

TEST_CASE("write streams") {
  CHECK(rules_of(run("\\write18{ls}")) == std::set<std::string>{"R1_SHELL_ESCAPE"});
  CHECK(rules_of(run("\\write 18 {ls}")) == std::set<std::string>{"R1_SHELL_ESCAPE"});
  CHECK(rules_of(run("\\immediate\\write3{x}")) == std::set<std::string>{"R3_FILE_WRITE"});
  CHECK(rules_of(run("\\write\\myout{x}")) == std::set<std::string>{"R3_FILE_WRITE"});
  CHECK(run("\\write-1{log only}").empty());
  CHECK(run("\\write16{terminal}").empty());
  CHECK(run("\\write180{x}").empty());
  CHECK(rules_of(run("\\newwrite\\out\\immediate\\openout\\out=notes.txt")) ==
        std::set<std::string>{"R3_FILE_WRITE"});
  CHECK(run("\\newwrite\\out\\immediate\\openout\\out=notes.txt").size() == 2);
}

TEST_CASE("write18 span starts at immediate") {
  const std::string src = "x \\immediate \\write18{id}";
  const auto f = run(src);
  REQUIRE(f.size() == 2);
  CHECK(f[0].span == ByteRange{2, src.size()});
  CHECK(f[1].span.slice(src) == "id");
}

TEST_CASE("other read commands") {
  CHECK(rules_of(run("\\lstinputlisting[language=sh]{/etc/hosts}")).count("R2_FILE_READ"));
  CHECK(rules_of(run("\\verbatiminput{../../etc/passwd}")).count("R6_SENSITIVE_PATH"));
  CHECK(rules_of(run("\\newread\\f\\openin\\f=/etc/group")) ==
        std::set<std::string>{"R2_FILE_READ", "R6_SENSITIVE_PATH"});
  const auto f = run("\\input{/usr/share/dict/words}");
  REQUIRE(f.size() == 1);
  CHECK(f[0].severity == Severity::High);
  CHECK(run("\\openin\\f=local.dat").empty());
}

TEST_CASE("lua execution and body scan") {
  const auto f = run("\\directlua{os.execute(\"lscpu >> out.txt\") local h = io.open('/etc/shadow')}");
  CHECK(rules_of(f) == std::set<std::string>{"R4_LUA_EXEC", "R6_SENSITIVE_PATH"});
  CHECK(categories_of(f) == std::set<Category>{Category::Cpu, Category::Passwords});

  const auto g = run("\\begin{luacode}\nio.popen([[netstat -rn]])\n\\end{luacode}\n");
  REQUIRE(g.size() == 2);
  CHECK(g[0].rule == RuleId::LuaExec);
  CHECK(g[1].category == Category::RoutingTables);

  Policy policy;
  policy.luatex_restricted = true;
  for (const auto& finding : run("\\luaexec{print(os.getenv('HOME'))}", policy)) {
    CHECK(finding.disposition == Disposition::BlockedByPolicy);
  }
}

TEST_CASE("hiding primitives") {
  CHECK(run("\\pdfcompresslevel=0").size() == 1);
  CHECK(run("\\pdfobjcompresslevel 0").size() == 1);
  CHECK(run("\\pdfcompresslevel=9").empty());
  CHECK(run("\\pdfvariable compresslevel=0").size() == 1);
  CHECK(run("\\immediate\\pdfextension obj file{output.txt}").size() == 1);

  const auto white = run("{\\color{white}\\input{output.txt}\\par}");
  REQUIRE(white.size() == 1);
  CHECK(white[0].rule == RuleId::Hiding);
  CHECK(white[0].evidence == "\\input{output.txt}\\par");
  CHECK(run("\\textcolor[rgb]{1,1,0.96}{secret}").size() == 1);
  CHECK(run("\\textcolor[cmyk]{0,0,0,0}{secret}").size() == 1);
  CHECK(run("\\textcolor[RGB]{255,255,250}{secret}").size() == 1);
  CHECK(run("\\textcolor[gray]{0.5}{secret}").empty());
  CHECK(run("\\textcolor{red}{visible}").empty());
  CHECK(run("{\\color{white}}").empty());
}

TEST_CASE("catcode changes are flagged once each") {
  const auto f = run("\\catcode`\\|=0 \\catcode`\\%=12");
  REQUIRE(f.size() == 2);
  CHECK(f[0].rule == RuleId::Obfuscation);
  CHECK(f[0].severity == Severity::Medium);
}

TEST_CASE("whitelist mode") {
  Policy policy;
  policy.mode = PolicyMode::Whitelist;
  policy.allowed_commands = {"documentclass", "begin", "end", "section"};
  const auto f = run("\\documentclass{article}\\begin{document}\\section{A}\\emph{b}\\end{document}",
                     policy);
  REQUIRE(f.size() == 1);
  CHECK(f[0].rule == RuleId::NotAllowed);
  CHECK(f[0].evidence == "emph");
  CHECK(f[0].disposition == Disposition::BlockedByPolicy);

  const auto g = run("\\input{/etc/shadow}", policy);
  REQUIRE(g.size() == 3);
  for (const auto& finding : g) CHECK(finding.disposition == Disposition::BlockedByPolicy);
}

TEST_CASE("classify_path") {
  const auto a = classify_path("/etc/network/interfaces");
  CHECK(a.kind == PathKind::Absolute);
  CHECK(a.sensitive);
  CHECK(a.category == Category::NetworkInterfaces);

  const auto b = classify_path("figures/plot.pdf");
  CHECK(b.kind == PathKind::ProjectRelative);
  CHECK_FALSE(b.sensitive);
  CHECK_FALSE(b.category.has_value());

  const auto c = classify_path("../../etc/passwd");
  CHECK(c.kind == PathKind::ParentEscape);
  CHECK(c.sensitive);
  CHECK(c.category == Category::UserGroupNames);

  CHECK(classify_path("/etc/./ssh//ssh_host_rsa_key").category == Category::SslCertificates);
  CHECK(classify_path("/etc/ssh/*_key").category == Category::SslCertificates);
  CHECK_FALSE(classify_path("/etc/ssh/ssh_host_rsa_key.pub").sensitive);
  CHECK(classify_path("/etc/passwd/../shadow").category == Category::Passwords);
  CHECK(classify_path("sub/../../x").kind == PathKind::ParentEscape);
  CHECK(classify_path("~/.ssh/id_rsa").kind == PathKind::Absolute);
  CHECK_FALSE(classify_path("etc/passwd").sensitive);
}

TEST_CASE("normalize_path agrees with the standard library") {
  std::mt19937_64 rng(42);
  const std::vector<std::string> parts = {"a", "b", "..", ".", "", "etc", "passwd"};
  for (int trial = 0; trial < 5000; ++trial) {
    std::string path = rng() % 2 ? "/" : "";
    const std::size_t count = 1 + rng() % 6;
    for (std::size_t i = 0; i < count; ++i) {
      if (i) path += '/';
      path += parts[rng() % parts.size()];
    }
    std::string expected = fs::path(path).lexically_normal().generic_string();
    while (expected.size() > 1 && expected.back() == '/') expected.pop_back();
    if (expected.empty()) expected = ".";
    INFO(path);
    REQUIRE(normalize_path(path) == expected);
  }
}

TEST_CASE("classify_command") {
  auto cats = [](const std::string& cmd) {
    std::vector<Category> out;
    for (const auto& m : classify_command(cmd)) out.push_back(m.category);
    return out;
  };
  CHECK(cats("netstat -tulpn | grep LISTEN >> output.txt") ==
        std::vector<Category>{Category::OpenPorts});
  CHECK(cats("netstat -rn") == std::vector<Category>{Category::RoutingTables});
  CHECK(cats("sudo LANG=C ip addr show") == std::vector<Category>{Category::NetworkInterfaces});
  CHECK(cats("echo hi > /etc/passwd").empty());
  CHECK(cats("cat \"/etc/shadow\" 2>/dev/null") == std::vector<Category>{Category::Passwords});
  CHECK(cats("x=$(whoami); echo $x") == std::vector<Category>{Category::UserGroupNames});
  CHECK(cats("apt list").empty());
  CHECK(cats("ls -la").empty());
  const auto m = classify_command("cat /etc/ssh/*_key>> output.txt");
  REQUIRE(m.size() == 1);
  CHECK(m[0].offset == 4);
  CHECK(m[0].length == 14);
}

TEST_CASE("listings match the committed rule table") {
  std::ifstream table(testing::fixture_path("tex/listings/expected_rules.txt"));
  std::string line;
  std::size_t checked = 0;
  while (std::getline(table, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string file;
    fields >> file;
    std::set<std::string> expected;
    for (std::string rule; fields >> rule;) expected.insert(rule);
    const std::string src = read_file(testing::fixture_path("tex/listings/" + file).string());
    const auto findings = run(src);
    INFO(file);
    CHECK_FALSE(findings.empty());
    CHECK(rules_of(findings) == expected);
    ++checked;
  }
  CHECK(checked == 19);
}

TEST_CASE("full catalog document yields the expected findings") {
  // Hand-derived: one shell escape per probe line, each tagged with the
  // category its command or path reveals, plus the hosts read and the hiding.
  const std::vector<std::pair<std::string, Category>> shell_lines = {
      {"users >> output.txt", Category::UserGroupNames},
      {"groups >> output.txt", Category::UserGroupNames},
      {"cat /etc/passwd >> output.txt", Category::UserGroupNames},
      {"cat /etc/group >> output.txt", Category::UserGroupNames},
      {"uname -a >> output.txt", Category::System},
      {"lshw -short >> output.txt", Category::Hardware},
      {"lscpu >> output.txt", Category::Cpu},
      {"cat /etc/shadow >> output.txt", Category::Passwords},
      {"apt list --upgradable >> output.txt", Category::OutdatedSoftware},
      {"debsecan | grep \"high urgency\" | grep \"remotely exploitable\" >> output.txt",
       Category::KnownVulnerabilities},
      {"nmap localhost >> output.txt", Category::OpenPorts},
      {"netstat -tulpn | grep LISTEN >> output.txt", Category::OpenPorts},
      {"ifconfig >> output.txt", Category::NetworkInterfaces},
      {"cat /etc/network/interfaces >> output.txt", Category::NetworkInterfaces},
      {"cat /etc/protocols >> output.txt", Category::NetworkingProtocols},
      {"iptables -S >> output.txt", Category::FirewallConfigurations},
      {"netstat -rn >> output.txt", Category::RoutingTables},
      {"cat /etc/ssh/sshd_config >> output.txt", Category::ServerConfiguration},
      {"cat /etc/apache2/apache2.conf >> output.txt", Category::ServerConfiguration},
      {"cat /etc/apache2/.htpasswd >> output.txt", Category::WebPasswords},
      {"cat /etc/ssh/*_key>> output.txt", Category::SslCertificates},
  };
  const std::string src = read_file(testing::fixture_path("tex/full_catalog.tex").string());
  const auto f = run(src);
  REQUIRE(f.size() == 45);
  std::size_t i = 0;
  for (std::size_t line = 0; line < shell_lines.size(); ++line) {
    if (line == 14) {
      CHECK(f[i].rule == RuleId::FileRead);
      CHECK(f[i].evidence == "/etc/hosts");
      CHECK(f[i + 1].category == Category::Hostnames);
      i += 2;
    }
    INFO(shell_lines[line].first);
    CHECK(f[i].rule == RuleId::ShellEscape);
    CHECK(f[i].evidence == shell_lines[line].first);
    CHECK(f[i + 1].rule == RuleId::SensitivePath);
    CHECK(f[i + 1].category == shell_lines[line].second);
    CHECK(f[i].span.contains(f[i + 1].span));
    i += 2;
  }
  CHECK(f[i].rule == RuleId::Hiding);
  CHECK(f[i].evidence == "output.txt");
  CHECK(categories_of(f).size() == kCategoryCount);
}

TEST_CASE("full catalog golden report") {
  const fs::path dir = testing::fixture_path("tex");
  const auto report = scan_project(dir, "full_catalog.tex", Policy{});
  const std::string golden = read_file(testing::fixture_path("tex/full_catalog.golden.json").string());
  CHECK(report_json(report) == golden);
}

TEST_CASE("benign class corpus has no critical findings") {
  const fs::path dir = testing::fixture_path("benign_classes");
  const auto report = scan_project(dir, {}, Policy{});
  CHECK(report.files.size() == 10);
  for (const auto& file : report.files) {
    CHECK_FALSE(file.error.has_value());
    for (const auto& finding : file.findings) {
      INFO(file.path << " " << rule_code(finding.rule) << " " << finding.evidence);
      CHECK(finding.severity != Severity::Critical);
    }
  }
}

TEST_CASE("whitelist of every word in a benign file yields nothing") {
  const fs::path dir = testing::fixture_path("benign_classes");
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string src = read_file(entry.path().string());
    const auto stream = tex::tokenize(src);
    Policy policy;
    policy.mode = PolicyMode::Whitelist;
    for (const auto& t : stream.tokens) {
      if (t.kind == tex::TokenKind::ControlWord) policy.allowed_commands.insert(t.value);
    }
    if (policy.allowed_commands.empty()) continue;
    for (const auto& finding : analyze(stream, src, policy)) {
      CHECK(finding.rule != RuleId::NotAllowed);
    }
  }
}

TEST_CASE("scan_project on an empty directory") {
  testing::TempDir dir("empty");
  const auto report = scan_project(dir.path(), {}, Policy{});
  CHECK(report.files.empty());
  CHECK(report.finding_count() == 0);
}

TEST_CASE("scan_project follows inputs and picks up style files") {
  testing::TempDir dir("scan");
  write_file((dir.path() / "main.tex").string(), "\\usepackage{evil}\\input{body}\\input{/etc/hosts}");
  write_file((dir.path() / "body.tex").string(), "\\write18{id}");
  write_file((dir.path() / "evil.sty").string(), "\\AtBeginDocument{\\immediate\\write18{lscpu}}");
  const auto report = scan_project(dir.path(), "main.tex", Policy{});
  REQUIRE(report.files.size() == 3);
  CHECK(report.files[0].path == "main.tex");
  CHECK(report.files[1].path == "body.tex");
  CHECK(report.files[2].path == "evil.sty");
  CHECK(report.finding_count() == 6);
  CHECK(report_json(report) == report_json(scan_project(dir.path(), "main.tex", Policy{})));
  CHECK(report_text(report).find("main.tex:1:") != std::string::npos);
}

TEST_CASE("policy monotonicity on random sources") {
  std::mt19937_64 rng(7);
  const std::vector<std::string> snippets = {
      "\\immediate\\write18{cat /etc/passwd}", "\\input{/etc/hosts}", "\\directlua{os.execute('id')}",
      "\\pdfobj file{x}", "\\catcode`\\~=13", "\\openout\\f=a.txt", "text ", "{\\color{white}x}"};
  for (int trial = 0; trial < 200; ++trial) {
    std::string src;
    for (int k = 0; k < 6; ++k) src += snippets[rng() % snippets.size()];
    Policy loose;
    loose.sandbox = static_cast<SandboxKind>(rng() % 5);
    Policy tight = loose;
    tight.shell_escape_restricted = rng() % 2;
    tight.file_io_restricted = rng() % 2;
    tight.luatex_restricted = rng() % 2;
    const auto a = run(src, loose);
    const auto b = run(src, tight);
    REQUIRE(a.size() == b.size());
    std::size_t blocked_a = 0, blocked_b = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      REQUIRE(a[i].span == b[i].span);
      blocked_a += a[i].disposition == Disposition::BlockedByPolicy;
      blocked_b += b[i].disposition == Disposition::BlockedByPolicy;
    }
    REQUIRE(blocked_b >= blocked_a);
  }
}
