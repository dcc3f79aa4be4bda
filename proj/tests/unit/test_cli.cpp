#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <random>
#include <sstream>

#include <json.hpp>

#include "test_support.hpp"
#include "texguard/cli/cli.hpp"
#include "texguard/common/bytes.hpp"

using namespace texguard;
using texguard::testing::data_path;
using texguard::testing::fixture_path;
using texguard::testing::TempDir;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args, const std::string& stdin_bytes = {}) {
  std::istringstream in(stdin_bytes);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("usage errors exit 2 with help on the error stream") {
  auto r = invoke({"scan-pdf", "--bogus", "x.pdf"});
  CHECK(r.code == cli::kExitError);
  CHECK(r.out.empty());
  CHECK(r.err.find("--bogus") != std::string::npos);
  CHECK(r.err.find("Usage") != std::string::npos);
  CHECK(invoke({}).code == cli::kExitError);
  CHECK(invoke({"frobnicate"}).code == cli::kExitError);
  CHECK(invoke({"scan-pdf", "--format", "xml", "a.pdf"}).code == cli::kExitError);
  CHECK(invoke({"scan-pdf", "--white-threshold", "2", "a.pdf"}).code == cli::kExitError);
  r = invoke({"--help"});
  CHECK(r.code == cli::kExitClean);
  CHECK(r.out.find("synth-fixture") != std::string::npos);
}

TEST_CASE("scan-tex on the full catalog document") {
  const std::string entry = fixture_path("tex/full_catalog.tex").string();
  const auto r = invoke({"scan-tex", entry, "--format", "json"});
  CHECK(r.code == cli::kExitFindings);
  CHECK(r.out == read_file(fixture_path("tex/full_catalog.golden.json").string()));
  const auto json = nlohmann::json::parse(r.out);
  CHECK(json["summary"]["findings"].get<int>() >= 22);
  CHECK(invoke({"scan-tex", entry, "--format", "json"}).out == r.out);

  const auto text = invoke({"scan-tex", entry});
  CHECK(text.code == cli::kExitFindings);
  CHECK(text.out.find("full_catalog.tex:") != std::string::npos);
  CHECK(invoke({"scan-tex", "/nonexistent/main.tex"}).code == cli::kExitError);
}

TEST_CASE("scan-tex policy from flag and environment") {
  const std::string entry = fixture_path("tex/listings/08_shadow.tex").string();
  const std::string policy = data_path("policies/shell-only.policy").string();
  auto r = invoke({"scan-tex", entry, "--policy", policy, "--format", "json"});
  CHECK(r.out.find("blocked_by_policy") != std::string::npos);

  ::setenv("TEXGUARD_POLICY", policy.c_str(), 1);
  auto from_env = invoke({"scan-tex", entry, "--format", "json"});
  ::unsetenv("TEXGUARD_POLICY");
  CHECK(from_env.out == r.out);
  auto open = invoke({"scan-tex", entry, "--format", "json"});
  CHECK(open.out.find("blocked_by_policy") == std::string::npos);

  CHECK(invoke({"scan-tex", entry, "--policy", "/nonexistent.policy"}).code == cli::kExitError);
}

TEST_CASE("clean document scans clean") {
  const auto r = invoke({"scan-pdf", fixture_path("pdf/minimal.pdf").string()});
  CHECK(r.code == cli::kExitClean);
  CHECK(r.out.find("0 candidate") != std::string::npos);
}

TEST_CASE("non-PDF input is an error") {
  const auto r = invoke({"scan-pdf", "-"}, "hello world");
  CHECK(r.code == cli::kExitError);
  CHECK(r.err.find("not a PDF") != std::string::npos);
}

TEST_CASE("synthesize, scan and extract through standard streams") {
  std::mt19937_64 rng(7);
  const std::string secret = texguard::testing::random_bytes(rng, 5000);
  for (const char* channel : {"unindexed_stream", "white_text", "comment", "post_eof"}) {
    for (bool compress : {false, true}) {
      INFO(channel << " compress=" << compress);
      std::vector<std::string> synth = {"synth-fixture", "--channel", channel};
      if (compress) synth.push_back("--compress");
      const auto pdf = invoke(synth, secret);
      REQUIRE(pdf.code == cli::kExitClean);

      const auto scan = invoke({"scan-pdf", "-", "--format", "json"}, pdf.out);
      CHECK(scan.code == cli::kExitFindings);
      const auto json = nlohmann::json::parse(scan.out);
      REQUIRE(json["candidates"].size() == 1);
      CHECK(json["candidates"][0]["channel"] == channel);

      const auto extracted = invoke({"extract", "-", "--id", "c1"}, pdf.out);
      CHECK(extracted.code == cli::kExitClean);
      CHECK(extracted.out == secret);
    }
  }
}

TEST_CASE("extract to files") {
  TempDir tmp("cli-extract");
  const std::string pdf_path = (tmp.path() / "hidden.pdf").string();
  CHECK(invoke({"synth-fixture", "--channel", "post_eof", "--out", pdf_path}, "abc").code == 0);
  const std::string out = (tmp.path() / "payload.bin").string();
  CHECK(invoke({"extract", pdf_path, "--id", "c1", "--out", out}).code == cli::kExitClean);
  CHECK(read_file(out) == "abc");
  const auto dir = tmp.path() / "all";
  CHECK(invoke({"extract", pdf_path, "--out-dir", dir.string()}).code == cli::kExitClean);
  CHECK(read_file((dir / "c1.bin").string()) == "abc");
  CHECK(invoke({"extract", pdf_path, "--id", "c9"}).code == cli::kExitError);
  CHECK(invoke({"extract", pdf_path}).code == cli::kExitError);
}

TEST_CASE("clean corpus written by synth-fixture scans clean") {
  TempDir tmp("cli-clean");
  REQUIRE(invoke({"synth-fixture", "--clean-corpus", tmp.path().string()}).code == 0);
  std::vector<std::string> args = {"scan-pdf"};
  for (const auto& item : std::filesystem::directory_iterator(tmp.path())) {
    args.push_back(item.path().string());
  }
  CHECK(args.size() == 6);
  const auto r = invoke(args);
  CHECK(r.code == cli::kExitClean);
}

TEST_CASE("detector toggles and thresholds") {
  const auto pdf = invoke({"synth-fixture", "--channel", "comment"}, std::string(40, 'z')).out;
  CHECK(invoke({"scan-pdf", "-"}, pdf).code == cli::kExitFindings);
  CHECK(invoke({"scan-pdf", "-", "--no-comments"}, pdf).code == cli::kExitClean);
  CHECK(invoke({"scan-pdf", "-", "--min-comment-len", "100"}, pdf).code == cli::kExitClean);
  const auto json =
      nlohmann::json::parse(invoke({"scan-pdf", "-", "--format", "json",
                                    "--printable-threshold", "1.0"}, pdf).out);
  CHECK(json["candidates"][0]["classification"] == "leaked_text");
}

TEST_CASE("gen-payload") {
  auto r = invoke({"gen-payload", "--probes", "uname,hosts_file", "--hiding", "unindexed_stream"});
  CHECK(r.code == cli::kExitClean);
  CHECK(r.out.find("uname -a") != std::string::npos);
  CHECK(r.out.find("authorized testing only") != std::string::npos);
  r = invoke({"gen-payload", "--probes", "uname", "--no-marker"});
  CHECK(r.out.find("authorized testing only") == std::string::npos);
  CHECK(invoke({"gen-payload", "--probes", "nope"}).code == cli::kExitError);
  CHECK(invoke({"gen-payload", "--engine", "dvi", "--hiding", "unindexed_stream"}).code ==
        cli::kExitError);
  r = invoke({"gen-payload", "--list-probes"});
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 22);
}

TEST_CASE("simulate") {
  auto r = invoke({"simulate", "--profile", data_path("profiles/04-plmlatex.profile").string(),
                   "--format", "json"});
  CHECK(r.code == cli::kExitFindings);
  const auto json = nlohmann::json::parse(r.out);
  CHECK(json["service"] == "PLMlatex");
  CHECK(json["comparison"]["matched"] == 15);
  CHECK(json["predicted"]["Network interfaces"] == "obtained");

  r = invoke({"simulate", "--profile", data_path("profiles/07-arxiv.profile").string()});
  CHECK(r.code == cli::kExitClean);
  CHECK(r.out.find("obtained") == std::string::npos);

  r = invoke({"simulate", "--profile", data_path("profiles").string(), "--format", "json"});
  CHECK(nlohmann::json::parse(r.out).size() == 7);
  CHECK(invoke({"simulate"}).code == cli::kExitError);
}

TEST_CASE("integration is skipped without an engine") {
  const auto r = invoke({"integration", "--engine-binary", "texguard-no-such-engine"});
  CHECK(r.code == cli::kExitClean);
  CHECK(r.out.find("skipped") != std::string::npos);
}
