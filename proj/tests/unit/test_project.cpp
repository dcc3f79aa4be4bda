#include <doctest.h>

#include <fstream>

#include "test_support.hpp"
#include "texguard/tex/project.hpp"

using namespace texguard;
using namespace texguard::tex;
namespace fs = std::filesystem;

namespace {

void write(const fs::path& path, const std::string& text) {
  fs::create_directories(path.parent_path());
  std::ofstream(path, std::ios::binary) << text;
}

}  // namespace

TEST_CASE("relative input inside the project") {
  testing::TempDir dir("project");
  write(dir.path() / "main.tex", "\\input{chapter1}\n");
  write(dir.path() / "chapter1.tex", "Hello\n");
  const auto graph = resolve_project_inputs(dir.path() / "main.tex", dir.path());
  REQUIRE(graph.nodes.size() == 2);
  CHECK(graph.nodes[0].path == "main.tex");
  CHECK(graph.nodes[1].path == "chapter1.tex");
  CHECK(graph.nodes[1].tag == InputTag::Internal);
  REQUIRE(graph.edges.size() == 1);
  CHECK_FALSE(graph.has_cycle());
}

TEST_CASE("absolute and escaping inputs are external leaves") {
  testing::TempDir dir("project");
  write(dir.path() / "main.tex", "\\input{/etc/shadow}\\include{../../etc/passwd}\\input{gone}");
  const auto graph = resolve_project_inputs(dir.path() / "main.tex", dir.path());
  REQUIRE(graph.nodes.size() == 4);
  CHECK(graph.nodes[1].path == "/etc/shadow");
  CHECK(graph.nodes[1].tag == InputTag::External);
  CHECK(graph.nodes[2].tag == InputTag::External);
  CHECK(graph.nodes[3].tag == InputTag::Missing);
}

TEST_CASE("self inclusion terminates with a marked cycle") {
  testing::TempDir dir("project");
  write(dir.path() / "main.tex", "\\input{main}\n");
  const auto graph = resolve_project_inputs(dir.path() / "main.tex", dir.path());
  REQUIRE(graph.nodes.size() == 1);
  REQUIRE(graph.edges.size() == 1);
  CHECK(graph.edges[0].from == 0);
  CHECK(graph.edges[0].to == 0);
  CHECK(graph.edges[0].cycle);
}

TEST_CASE("mutual inclusion cycle") {
  testing::TempDir dir("project");
  write(dir.path() / "a.tex", "\\input{b}");
  write(dir.path() / "b.tex", "\\input{a.tex}");
  const auto graph = resolve_project_inputs(dir.path() / "a.tex", dir.path());
  CHECK(graph.nodes.size() == 2);
  CHECK(graph.has_cycle());
}

TEST_CASE("symlink escaping the project is external") {
  testing::TempDir dir("project");
  testing::TempDir outside("outside");
  write(outside.path() / "secret.tex", "secret");
  write(dir.path() / "main.tex", "\\input{link}");
  fs::create_symlink(outside.path() / "secret.tex", dir.path() / "link.tex");
  const auto graph = resolve_project_inputs(dir.path() / "main.tex", dir.path());
  REQUIRE(graph.nodes.size() == 2);
  CHECK(graph.nodes[1].tag == InputTag::External);
}

TEST_CASE("is_within") {
  CHECK(is_within("/a/b", "/a/b/c"));
  CHECK(is_within("/a/b", "/a/b/c/../d"));
  CHECK_FALSE(is_within("/a/b", "/a/bc"));
  CHECK_FALSE(is_within("/a/b", "/a/b/../c"));
}
