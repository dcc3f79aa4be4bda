#include "texguard/tex/project.hpp"

#include <functional>
#include <map>
#include <set>

#include "texguard/tex/arguments.hpp"
#include "texguard/tex/lexer.hpp"

namespace fs = std::filesystem;

namespace texguard::tex {

namespace {

constexpr std::size_t kNpos = static_cast<std::size_t>(-1);
constexpr std::size_t kMaxDepth = 256;

bool is_input_command(const Token& token) {
  return token.is_word("input") || token.is_word("include") ||
         token.is_word("InputIfFileExists");
}

fs::path canonical_or_lexical(const fs::path& path) {
  std::error_code ec;
  fs::path result = fs::weakly_canonical(path, ec);
  if (ec) return fs::absolute(path).lexically_normal();
  return result;
}

class Resolver {
 public:
  explicit Resolver(fs::path root) : root_(canonical_or_lexical(root)) {}

  InputGraph run(const fs::path& entry) {
    fs::path entry_path = entry;
    if (entry_path.is_relative()) {
      std::error_code ec;
      if (fs::exists(root_ / entry_path, ec)) entry_path = root_ / entry_path;
    }
    const fs::path canonical = canonical_or_lexical(entry_path);
    const std::string relative = canonical.lexically_relative(root_).generic_string();
    std::error_code ec;
    InputTag tag = InputTag::Internal;
    if (!is_within(root_, canonical)) {
      tag = InputTag::External;
    } else if (!fs::is_regular_file(canonical, ec)) {
      tag = InputTag::Missing;
    }
    const std::size_t root_node =
        add_node(tag == InputTag::External ? entry.generic_string() : relative, tag);
    if (tag == InputTag::Internal) visit(root_node, 0);
    return std::move(graph_);
  }

 private:
  std::size_t add_node(const std::string& path, InputTag tag) {
    const std::string key = (tag == InputTag::External ? "external:" : "") + path;
    if (auto it = index_.find(key); it != index_.end()) return it->second;
    graph_.nodes.push_back(InputNode{path, tag});
    index_.emplace(key, graph_.nodes.size() - 1);
    return graph_.nodes.size() - 1;
  }

  std::size_t resolve_target(const std::string& name) {
    if (name.empty()) return kNpos;
    if (name.front() == '/' || name.front() == '~') return add_node(name, InputTag::External);
    const fs::path normal = fs::path(name).lexically_normal();
    const std::string normal_text = normal.generic_string();
    if (normal_text == ".." || normal_text.rfind("../", 0) == 0) {
      return add_node(name, InputTag::External);
    }
    std::vector<fs::path> candidates;
    if (normal.has_extension()) {
      candidates = {normal, fs::path(normal_text + ".tex")};
    } else {
      candidates = {fs::path(normal_text + ".tex"), normal};
    }
    for (const auto& candidate : candidates) {
      const fs::path full = root_ / candidate;
      std::error_code ec;
      if (!fs::exists(full, ec)) continue;
      // A symlink that leads out of the project is treated like an absolute path.
      if (!is_within(root_, full)) return add_node(name, InputTag::External);
      if (!fs::is_regular_file(full, ec)) continue;
      return add_node(candidate.generic_string(), InputTag::Internal);
    }
    return add_node(candidates.front().generic_string(), InputTag::Missing);
  }

  void visit(std::size_t node, std::size_t depth) {
    visited_.insert(node);
    if (depth >= kMaxDepth) return;
    on_stack_.insert(node);
    std::string source;
    try {
      source = read_file((root_ / graph_.nodes[node].path).string());
    } catch (const std::exception&) {
      on_stack_.erase(node);
      return;
    }
    const TokenStream stream = tokenize(source, graph_.nodes[node].path);
    for (std::size_t i = 0; i < stream.tokens.size(); ++i) {
      if (!is_input_command(stream.tokens[i])) continue;
      const auto arg = read_file_argument(stream, source, i, FileSyntax::Plain);
      if (!arg) continue;
      const std::size_t target = resolve_target(arg->name);
      if (target == kNpos) continue;
      InputEdge edge{node, target, arg->span, on_stack_.count(target) > 0};
      graph_.edges.push_back(edge);
      if (graph_.nodes[target].tag == InputTag::Internal && !visited_.count(target)) {
        visit(target, depth + 1);
      }
    }
    on_stack_.erase(node);
  }

  fs::path root_;
  InputGraph graph_;
  std::map<std::string, std::size_t> index_;
  std::set<std::size_t> visited_;
  std::set<std::size_t> on_stack_;
};

}  // namespace

std::size_t InputGraph::find(const std::string& path) const {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].path == path) return i;
  }
  return kNpos;
}

bool InputGraph::has_cycle() const {
  for (const auto& edge : edges) {
    if (edge.cycle) return true;
  }
  return false;
}

bool is_within(const fs::path& root, const fs::path& candidate) {
  const fs::path base = canonical_or_lexical(root);
  const fs::path target = canonical_or_lexical(candidate);
  const fs::path relative = target.lexically_relative(base);
  if (relative.empty()) return false;
  return *relative.begin() != "..";
}

InputGraph resolve_project_inputs(const fs::path& entry_file, const fs::path& project_root) {
  return Resolver(project_root).run(entry_file);
}

}  // namespace texguard::tex
