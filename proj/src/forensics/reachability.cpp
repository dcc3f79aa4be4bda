#include "texguard/forensics/reachability.hpp"

#include <deque>
#include <map>

namespace texguard::forensics {

void collect_references(const pdf::Value& value, std::vector<pdf::ObjectId>& out) {
  // Iterative so hostile nesting cannot exhaust the stack.
  std::vector<const pdf::Value*> pending{&value};
  while (!pending.empty()) {
    const pdf::Value* v = pending.back();
    pending.pop_back();
    if (const auto* ref = v->as_reference()) {
      out.push_back(ref->id);
    } else if (const auto* array = v->as_array()) {
      for (auto it = array->rbegin(); it != array->rend(); ++it) pending.push_back(&*it);
    } else if (const auto* dict = v->dict_like()) {
      for (auto it = dict->entries.rbegin(); it != dict->entries.rend(); ++it) {
        pending.push_back(&it->value);
      }
    }
  }
}

ReachabilityReport reachable_set(const pdf::PdfDocument& doc) {
  ReachabilityReport report;
  std::map<pdf::ObjectId, std::vector<pdf::ObjectId>> adjacency;
  for (const auto& [id, object] : doc.objects) {
    std::vector<pdf::ObjectId> targets;
    collect_references(object.body, targets);
    for (const auto& target : targets) report.graph_edges.emplace_back(id, target);
    adjacency[id] = std::move(targets);
  }
  // Container -> member edges for object streams.
  std::map<std::uint32_t, pdf::ObjectId> containers;
  for (const auto& [id, object] : doc.objects) {
    if (object.origin != pdf::Origin::ObjectStream && doc.structural.count(id)) {
      containers[id.number] = id;
    }
  }
  for (const auto& [id, object] : doc.objects) {
    if (!object.container) continue;
    const auto it = containers.find(*object.container);
    if (it == containers.end()) continue;
    report.graph_edges.emplace_back(it->second, id);
    adjacency[it->second].push_back(id);
  }

  if (doc.trailers.empty()) {
    report.warnings.push_back("no trailer: nothing is reachable");
  } else {
    for (const char* key : {"Root", "Info", "Encrypt"}) {
      const pdf::Value* v = doc.trailers.front().get(key);
      const pdf::Reference* ref = v ? v->as_reference() : nullptr;
      if (ref && doc.objects.count(ref->id)) report.roots.push_back(ref->id);
    }
    if (report.roots.empty()) report.warnings.push_back("trailer names no existing root object");
  }

  std::deque<pdf::ObjectId> queue(report.roots.begin(), report.roots.end());
  for (const auto& root : report.roots) report.reachable.insert(root);
  while (!queue.empty()) {
    const pdf::ObjectId current = queue.front();
    queue.pop_front();
    for (const auto& next : adjacency[current]) {
      if (!doc.objects.count(next)) continue;
      if (report.reachable.insert(next).second) queue.push_back(next);
    }
  }

  for (const auto& [id, object] : doc.objects) {
    if (!object.body.as_stream() || report.reachable.count(id) || doc.structural.count(id)) continue;
    report.unreachable_streams.push_back(id);
  }
  return report;
}

}  // namespace texguard::forensics
