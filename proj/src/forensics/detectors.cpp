#include "texguard/forensics/detectors.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "texguard/forensics/content.hpp"
#include "texguard/forensics/reachability.hpp"

namespace texguard::forensics {

namespace {

using pdf::Dict;
using pdf::ObjectId;
using pdf::PdfDocument;
using pdf::Value;

constexpr std::size_t kPreviewBytes = 256;
constexpr int kMaxTreeDepth = 64;

const Dict* resolve_dict(const PdfDocument& doc, const Value* value) {
  if (!value) return nullptr;
  return pdf::resolve(doc, *value).dict_like();
}

// Content of one page or form: the stream ids making it up, in order.
struct Drawable {
  std::vector<ObjectId> streams;
  const Dict* resources = nullptr;
};

class PageWalker {
 public:
  PageWalker(const PdfDocument& doc, std::vector<std::string>& warnings)
      : doc_(doc), warnings_(warnings) {}

  std::vector<Drawable> walk() {
    if (doc_.trailers.empty()) return {};
    const Dict* catalog = resolve_dict(doc_, doc_.trailers.front().get("Root"));
    if (!catalog) {
      warnings_.push_back("document catalog is missing");
      return {};
    }
    visit_node(catalog->get("Pages"), nullptr, 0);
    return std::move(out_);
  }

 private:
  void visit_node(const Value* node_ref, const Dict* inherited, int depth) {
    if (!node_ref || depth > kMaxTreeDepth) return;
    if (const auto* ref = node_ref->as_reference()) {
      if (!seen_.insert(ref->id).second) {
        warnings_.push_back("page tree revisits " + pdf::to_string(ref->id));
        return;
      }
    }
    const Dict* node = resolve_dict(doc_, node_ref);
    if (!node) return;
    const Dict* resources = resolve_dict(doc_, node->get("Resources"));
    if (!resources) resources = inherited;
    if (const Value* kids_value = node->get("Kids")) {
      if (const auto* kids = pdf::resolve(doc_, *kids_value).as_array()) {
        for (const auto& kid : *kids) visit_node(&kid, resources, depth + 1);
      }
      return;
    }
    Drawable page;
    page.resources = resources;
    if (const Value* contents = node->get("Contents")) add_streams(*contents, page.streams);
    out_.push_back(std::move(page));
    add_forms(resources, depth);
  }

  void add_streams(const Value& contents, std::vector<ObjectId>& streams) {
    if (const auto* ref = contents.as_reference()) {
      const Value& target = pdf::resolve(doc_, contents);
      if (target.as_stream()) {
        streams.push_back(ref->id);
      } else if (const auto* array = target.as_array()) {
        for (const auto& item : *array) {
          if (const auto* r = item.as_reference()) streams.push_back(r->id);
        }
      }
    } else if (const auto* array = contents.as_array()) {
      for (const auto& item : *array) {
        if (const auto* r = item.as_reference()) streams.push_back(r->id);
      }
    }
  }

  void add_forms(const Dict* resources, int depth) {
    if (!resources || depth > kMaxTreeDepth) return;
    const Dict* xobjects = resolve_dict(doc_, resources->get("XObject"));
    if (!xobjects) return;
    for (const auto& entry : xobjects->entries) {
      const auto* ref = entry.value.as_reference();
      if (!ref || !forms_.insert(ref->id).second) continue;
      const pdf::PdfObject* object = pdf::find_object(doc_, ref->id);
      const pdf::Stream* stream = object ? object->body.as_stream() : nullptr;
      if (!stream) continue;
      const Value* subtype = stream->dict.get("Subtype");
      if (!subtype || subtype->as_name() != "Form") continue;
      const Dict* own = resolve_dict(doc_, stream->dict.get("Resources"));
      out_.push_back(Drawable{{ref->id}, own ? own : resources});
      add_forms(own, depth + 1);
    }
  }

  const PdfDocument& doc_;
  std::vector<std::string>& warnings_;
  std::vector<Drawable> out_;
  std::set<ObjectId> seen_;
  std::set<ObjectId> forms_;
};

bool is_header_comment(const PdfDocument& doc, const pdf::Comment& comment, std::size_t index) {
  if (comment.span.begin == doc.header_offset && comment.text.rfind("PDF-", 0) == 0) return true;
  // The binary marker line right after the header: a few bytes, all high.
  if (index == 1 && comment.text.size() >= 4 && comment.text.size() <= 8 &&
      std::all_of(comment.text.begin(), comment.text.end(),
                  [](char c) { return static_cast<unsigned char>(c) >= 128; })) {
    return true;
  }
  return false;
}

bool all_hex(std::string_view text) {
  return !text.empty() && text.size() % 2 == 0 &&
         std::all_of(text.begin(), text.end(), [](char c) {
           return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
         });
}

}  // namespace

std::vector<HiddenCandidate> find_unindexed_streams(const PdfDocument& doc,
                                                    const DetectorOptions& options,
                                                    std::vector<std::string>* warnings) {
  std::vector<HiddenCandidate> out;
  const ReachabilityReport reach = reachable_set(doc);
  if (warnings) warnings->insert(warnings->end(), reach.warnings.begin(), reach.warnings.end());
  for (const ObjectId& id : reach.unreachable_streams) {
    const pdf::PdfObject& object = doc.objects.at(id);
    HiddenCandidate candidate;
    candidate.channel = Channel::UnindexedStream;
    candidate.location = id;
    candidate.raw = object.body.as_stream()->raw;
    const pdf::DecodeResult decoded = pdf::decode_stream(doc, object);
    if (decoded.ok()) {
      candidate.decoded = decoded.data;
      classify(candidate, options);
    } else {
      classify(candidate, options);
      candidate.classification = Classification::BinaryBlob;
      if (warnings) {
        warnings->push_back("stream " + pdf::to_string(id) + " does not decode: " +
                            std::string(pdf::decode_status_name(decoded.status)));
      }
    }
    out.push_back(std::move(candidate));
  }
  return out;
}

std::optional<HiddenCandidate> detect_post_eof(const PdfDocument& doc, const DetectorOptions& options) {
  if (doc.tail_bytes.empty()) return std::nullopt;
  HiddenCandidate candidate;
  candidate.channel = Channel::PostEof;
  candidate.raw = doc.tail_bytes;
  candidate.location = ByteRange{doc.tail_offset, doc.tail_offset + doc.tail_bytes.size()};
  classify(candidate, options);
  return candidate;
}

std::vector<HiddenCandidate> detect_comment_payloads(const PdfDocument& doc,
                                                     const DetectorOptions& options) {
  std::vector<HiddenCandidate> out;
  for (std::size_t i = 0; i < doc.comments.size(); ++i) {
    const pdf::Comment& comment = doc.comments[i];
    if (is_header_comment(doc, comment, i)) continue;
    if (comment.text.size() <= options.min_comment_len) continue;
    HiddenCandidate candidate;
    candidate.channel = Channel::Comment;
    candidate.location = comment.span;
    candidate.raw = comment.text;
    std::string bytes;
    if (all_hex(comment.text) && from_hex(comment.text, bytes)) candidate.decoded = std::move(bytes);
    classify(candidate, options);
    out.push_back(std::move(candidate));
  }
  return out;
}

std::vector<HiddenCandidate> detect_white_text(const PdfDocument& doc, const DetectorOptions& options,
                                               std::vector<std::string>* warnings) {
  std::vector<HiddenCandidate> out;
  std::vector<std::string> local;
  std::vector<std::string>& sink = warnings ? *warnings : local;
  for (const Drawable& drawable : PageWalker(doc, sink).walk()) {
    std::string content;
    ObjectId first{};
    bool usable = true;
    for (std::size_t i = 0; i < drawable.streams.size(); ++i) {
      const pdf::PdfObject* object = pdf::find_object(doc, drawable.streams[i]);
      if (!object || !object->body.as_stream()) continue;
      const pdf::DecodeResult decoded = pdf::decode_stream(doc, *object);
      if (!decoded.ok()) {
        sink.push_back("content stream " + pdf::to_string(drawable.streams[i]) +
                       " does not decode: " + std::string(pdf::decode_status_name(decoded.status)));
        usable = false;
        break;
      }
      if (content.empty()) first = drawable.streams[i];
      if (i > 0) content += '\n';
      content += decoded.data;
    }
    if (!usable || drawable.streams.empty()) continue;
    ContentScan scan = find_invisible_text(content, options.white_threshold);
    if (!scan.error.empty()) {
      sink.push_back("content of " + pdf::to_string(first) + ": " + scan.error);
    }
    for (auto& run : scan.runs) {
      HiddenCandidate candidate;
      candidate.channel = Channel::WhiteText;
      candidate.location = first;
      candidate.raw = std::move(run.bytes);
      classify(candidate, options);
      out.push_back(std::move(candidate));
    }
  }
  return out;
}

ScanReport scan_document(const PdfDocument& doc, const DetectorOptions& options) {
  ScanReport report;
  report.warnings = doc.warnings;
  auto append = [&](std::vector<HiddenCandidate> found) {
    for (auto& c : found) report.candidates.push_back(std::move(c));
  };
  if (options.unindexed) append(find_unindexed_streams(doc, options, &report.warnings));
  if (options.white_text) append(detect_white_text(doc, options, &report.warnings));
  if (options.comments) append(detect_comment_payloads(doc, options));
  if (options.post_eof) {
    if (auto c = detect_post_eof(doc, options)) report.candidates.push_back(std::move(*c));
  }
  return report;
}

std::string candidate_id(std::size_t index) { return "c" + std::to_string(index + 1); }

std::string scan_report_json(const ScanReport& report) {
  using nlohmann::ordered_json;
  ordered_json candidates = ordered_json::array();
  for (std::size_t i = 0; i < report.candidates.size(); ++i) {
    const HiddenCandidate& c = report.candidates[i];
    ordered_json categories = ordered_json::array();
    for (Category cat : c.matched_categories) categories.push_back(category_name(cat));
    ordered_json item;
    item["id"] = candidate_id(i);
    item["channel"] = channel_name(c.channel);
    item["location"] = location_string(c.location);
    item["size"] = c.payload().size();
    item["classification"] = classification_name(c.classification);
    item["printable_ratio"] = static_cast<double>(static_cast<long long>(c.printable_ratio * 10000 + 0.5)) / 10000;
    item["categories"] = std::move(categories);
    item["preview"] = escape_bytes(c.payload(), kPreviewBytes);
    candidates.push_back(std::move(item));
  }
  ordered_json out;
  out["file"] = report.file;
  out["candidates"] = std::move(candidates);
  out["warnings"] = report.warnings;
  return out.dump(2) + "\n";
}

std::string scan_report_text(const ScanReport& report) {
  std::string out;
  for (std::size_t i = 0; i < report.candidates.size(); ++i) {
    const HiddenCandidate& c = report.candidates[i];
    out += report.file + ": " + candidate_id(i) + " " + std::string(channel_name(c.channel)) + " " +
           location_string(c.location) + " " + std::to_string(c.payload().size()) + " bytes " +
           std::string(classification_name(c.classification));
    for (Category cat : c.matched_categories) out += " [" + std::string(category_name(cat)) + "]";
    out += " " + escape_bytes(c.payload(), 60) + "\n";
  }
  for (const auto& w : report.warnings) out += report.file + ": warning: " + w + "\n";
  out += std::to_string(report.candidates.size()) + " candidate(s)\n";
  return out;
}

}  // namespace texguard::forensics
