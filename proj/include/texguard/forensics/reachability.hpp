#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "texguard/pdf/document.hpp"

namespace texguard::forensics {

struct ReachabilityReport {
  std::vector<pdf::ObjectId> roots;  // existing objects named by /Root, /Info, /Encrypt
  std::set<pdf::ObjectId> reachable;
  std::vector<pdf::ObjectId> unreachable_streams;  // structural streams excluded
  std::vector<std::pair<pdf::ObjectId, pdf::ObjectId>> graph_edges;
  std::vector<std::string> warnings;
};

// Breadth-first closure over references from the newest trailer. Object
// stream members hang off their container as well as off their referrers.
ReachabilityReport reachable_set(const pdf::PdfDocument& doc);

// Every reference inside a value, in document order, duplicates kept.
void collect_references(const pdf::Value& value, std::vector<pdf::ObjectId>& out);

}  // namespace texguard::forensics
