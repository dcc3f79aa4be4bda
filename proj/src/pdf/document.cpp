#include "texguard/pdf/document.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "texguard/pdf/syntax.hpp"

namespace texguard::pdf {

namespace {

constexpr std::size_t kHeaderWindow = 1024;
constexpr std::string_view kHeader = "%PDF-";

struct XrefEntry {
  int type = 1;           // 0 free, 1 in use at offset, 2 in object stream
  std::uint64_t field2 = 0;  // offset or container number
  std::uint32_t field3 = 0;  // generation or index
  Origin origin = Origin::XrefTable;
};

bool is_type(const Dict& dict, std::string_view type) {
  const Value* v = dict.get("Type");
  return v && v->as_name() == type;
}

std::optional<std::uint64_t> read_be(std::string_view data, std::size_t pos, int width) {
  std::uint64_t v = 0;
  for (int i = 0; i < width; ++i) {
    v = (v << 8) | static_cast<unsigned char>(data[pos + static_cast<std::size_t>(i)]);
  }
  return v;
}

class Loader {
 public:
  Loader(std::string_view bytes, PdfDocument& doc) : bytes_(bytes), doc_(doc) {}

  void run() {
    salvage_ = recover_objects(bytes_);
    for (std::size_t i = 0; i < salvage_.size(); ++i) {
      salvage_by_number_[salvage_[i].id.number].push_back(i);
    }
    if (const auto start = locate_startxref()) {
      doc_.startxref = *start;
      follow_chain(*start);
    } else {
      doc_.warnings.push_back("no usable startxref; falling back to object scan");
    }
    if (doc_.trailers.empty()) {
      load_from_salvage_only();
    } else {
      load_indexed_objects();
      add_unindexed_objects();
    }
    doc_.encrypted = std::any_of(doc_.trailers.begin(), doc_.trailers.end(),
                                 [](const Dict& t) { return t.get("Encrypt") != nullptr; });
    expand_containers();
    scan_layout();
  }

 private:
  // --- cross-reference chain -------------------------------------------

  std::optional<std::size_t> adjust_offset(std::size_t offset, bool want_table) {
    for (std::size_t candidate : {offset, offset + doc_.header_offset}) {
      if (candidate >= bytes_.size()) continue;
      SyntaxReader reader(bytes_, candidate);
      if (want_table && reader.keyword("xref")) return candidate;
      if (!want_table) {
        std::string error;
        auto parsed = parse_indirect_object(bytes_, candidate, length_resolver(), &error);
        if (parsed && parsed->body.as_stream() && is_type(parsed->body.as_stream()->dict, "XRef")) {
          return candidate;
        }
      }
      if (doc_.header_offset == 0) break;
    }
    return std::nullopt;
  }

  std::optional<std::size_t> locate_startxref() {
    std::vector<std::size_t> hits;
    for (std::size_t pos = find_keyword(bytes_, "startxref"); pos != std::string_view::npos;
         pos = find_keyword(bytes_, "startxref", pos + 1)) {
      hits.push_back(pos);
    }
    for (auto it = hits.rbegin(); it != hits.rend(); ++it) {
      SyntaxReader reader(bytes_, *it + 9);
      const auto offset = reader.integer();
      if (!offset || *offset < 0) continue;
      const auto at = static_cast<std::size_t>(*offset);
      if (adjust_offset(at, true) || adjust_offset(at, false)) {
        if (it != hits.rbegin()) {
          doc_.warnings.push_back("last startxref is invalid; using an earlier one");
        }
        startxref_keyword_ = *it;
        return at;
      }
    }
    if (!hits.empty()) startxref_keyword_ = hits.back();
    return std::nullopt;
  }

  void follow_chain(std::size_t first) {
    std::vector<std::size_t> pending{first};
    std::set<std::size_t> visited;
    while (!pending.empty()) {
      const std::size_t offset = pending.back();
      pending.pop_back();
      if (!visited.insert(offset).second) {
        doc_.warnings.push_back("cross-reference chain loops at offset " + std::to_string(offset));
        continue;
      }
      std::optional<Dict> trailer;
      if (const auto table_at = adjust_offset(offset, true)) {
        trailer = load_table(*table_at);
        if (trailer) {
          if (const auto stm = trailer->get("XRefStm"); stm && stm->as_int() && *stm->as_int() >= 0) {
            const auto stm_offset = static_cast<std::size_t>(*stm->as_int());
            if (const auto at = adjust_offset(stm_offset, false); at && visited.insert(stm_offset).second) {
              load_xref_stream(*at);
            } else {
              doc_.warnings.push_back("unreadable /XRefStm section");
            }
          }
        }
      } else if (const auto stream_at = adjust_offset(offset, false)) {
        trailer = load_xref_stream(*stream_at);
      }
      if (!trailer) {
        doc_.warnings.push_back("no cross-reference section at offset " + std::to_string(offset));
        continue;
      }
      doc_.trailers.push_back(*trailer);
      if (const Value* prev = trailer->get("Prev")) {
        if (const auto p = prev->as_int(); p && *p >= 0) {
          pending.push_back(static_cast<std::size_t>(*p));
        } else {
          doc_.warnings.push_back("malformed /Prev");
        }
      }
    }
  }

  void add_entry(std::uint32_t number, XrefEntry entry) { entries_.try_emplace(number, entry); }

  std::optional<Dict> load_table(std::size_t offset) {
    SyntaxReader reader(bytes_, offset);
    reader.keyword("xref");
    bool truncated = false;
    while (true) {
      const std::size_t section_start = reader.pos();
      const auto start = reader.integer();
      const auto count = reader.integer();
      if (!start || !count || *start < 0 || *count < 0) {
        reader.seek(section_start);
        break;
      }
      for (std::int64_t i = 0; i < *count; ++i) {
        const auto entry_offset = reader.integer();
        const auto generation = reader.integer();
        const bool in_use = reader.keyword("n");
        if (!entry_offset || !generation || (!in_use && !reader.keyword("f"))) {
          truncated = true;
          break;
        }
        const std::int64_t number = *start + i;
        if (number > std::numeric_limits<std::uint32_t>::max()) {
          truncated = true;
          break;
        }
        XrefEntry entry;
        entry.type = in_use && *entry_offset > 0 ? 1 : 0;
        entry.field2 = static_cast<std::uint64_t>(std::max<std::int64_t>(*entry_offset, 0));
        entry.field3 = static_cast<std::uint32_t>(std::clamp<std::int64_t>(*generation, 0, 65535));
        entry.origin = Origin::XrefTable;
        add_entry(static_cast<std::uint32_t>(number), entry);
      }
      if (truncated) break;
    }
    if (truncated) doc_.warnings.push_back("truncated cross-reference table");
    const std::size_t trailer_at =
        truncated ? find_keyword(bytes_, "trailer", offset) : reader.pos();
    if (trailer_at == std::string_view::npos) return std::nullopt;
    reader.seek(trailer_at);
    if (!reader.keyword("trailer")) {
      doc_.warnings.push_back("cross-reference table without trailer");
      return std::nullopt;
    }
    auto dict = reader.value();
    if (!dict || !dict->as_dict()) {
      doc_.warnings.push_back("malformed trailer dictionary");
      return std::nullopt;
    }
    return *dict->as_dict();
  }

  std::optional<Dict> load_xref_stream(std::size_t offset) {
    std::string error;
    auto parsed = parse_indirect_object(bytes_, offset, length_resolver(), &error);
    if (!parsed || !parsed->body.as_stream()) return std::nullopt;
    const Stream& stream = *parsed->body.as_stream();
    doc_.structural.insert(parsed->id);
    const DecodeResult decoded = decode_stream(stream);
    if (!decoded.ok()) {
      doc_.warnings.push_back("cross-reference stream " + to_string(parsed->id) +
                              " does not decode: " + std::string(decode_status_name(decoded.status)));
      return stream.dict;
    }
    const Array* w = stream.dict.get("W") ? stream.dict.get("W")->as_array() : nullptr;
    if (!w || w->size() != 3) {
      doc_.warnings.push_back("cross-reference stream without /W");
      return stream.dict;
    }
    int widths[3];
    int row = 0;
    for (int i = 0; i < 3; ++i) {
      const auto v = (*w)[static_cast<std::size_t>(i)].as_int();
      if (!v || *v < 0 || *v > 8) {
        doc_.warnings.push_back("cross-reference stream with bad /W");
        return stream.dict;
      }
      widths[i] = static_cast<int>(*v);
      row += widths[i];
    }
    std::vector<std::pair<std::int64_t, std::int64_t>> sections;
    if (const Value* index = stream.dict.get("Index"); index && index->as_array()) {
      const Array& a = *index->as_array();
      for (std::size_t i = 0; i + 1 < a.size(); i += 2) {
        sections.emplace_back(a[i].as_int().value_or(-1), a[i + 1].as_int().value_or(-1));
      }
    } else {
      const auto size = stream.dict.get("Size") ? stream.dict.get("Size")->as_int() : std::nullopt;
      sections.emplace_back(0, size.value_or(0));
    }
    const std::string& data = decoded.data;
    std::size_t pos = 0;
    for (const auto& [start, count] : sections) {
      if (start < 0 || count < 0) {
        doc_.warnings.push_back("cross-reference stream with bad /Index");
        break;
      }
      for (std::int64_t i = 0; i < count; ++i) {
        if (row == 0 || pos + static_cast<std::size_t>(row) > data.size()) {
          doc_.warnings.push_back("truncated cross-reference stream");
          return stream.dict;
        }
        const std::uint64_t type = widths[0] == 0 ? 1 : *read_be(data, pos, widths[0]);
        const std::uint64_t f2 = *read_be(data, pos + static_cast<std::size_t>(widths[0]), widths[1]);
        const std::uint64_t f3 =
            *read_be(data, pos + static_cast<std::size_t>(widths[0] + widths[1]), widths[2]);
        pos += static_cast<std::size_t>(row);
        const std::int64_t number = start + i;
        if (number > std::numeric_limits<std::uint32_t>::max()) continue;
        XrefEntry entry;
        entry.type = type <= 2 ? static_cast<int>(type) : 0;
        if (entry.type == 1 && f2 == 0) entry.type = 0;
        entry.field2 = f2;
        entry.field3 = static_cast<std::uint32_t>(std::min<std::uint64_t>(f3, 0xffffffffu));
        entry.origin = Origin::XrefStream;
        add_entry(static_cast<std::uint32_t>(number), entry);
      }
    }
    return stream.dict;
  }

  LengthResolver length_resolver() {
    return [this](ObjectId id) -> std::optional<std::int64_t> {
      if (resolving_length_) return std::nullopt;
      resolving_length_ = true;
      std::optional<std::int64_t> out;
      if (const auto it = entries_.find(id.number); it != entries_.end() && it->second.type == 1) {
        if (auto parsed = parse_indirect_object(bytes_, it->second.field2); parsed && parsed->id == id) {
          out = parsed->body.as_int();
        }
      }
      if (!out) {
        if (const auto it = salvage_by_number_.find(id.number); it != salvage_by_number_.end()) {
          for (auto k = it->second.rbegin(); k != it->second.rend() && !out; ++k) {
            if (salvage_[*k].id == id) out = salvage_[*k].body.as_int();
          }
        }
      }
      resolving_length_ = false;
      return out;
    };
  }

  // --- objects ---------------------------------------------------------

  const PdfObject* latest_salvaged(std::uint32_t number) const {
    const auto it = salvage_by_number_.find(number);
    if (it == salvage_by_number_.end()) return nullptr;
    return &salvage_[it->second.back()];
  }

  void load_indexed_objects() {
    const auto resolver = length_resolver();
    for (const auto& [number, entry] : entries_) {
      if (entry.type != 1) continue;
      std::optional<ParsedObject> parsed;
      for (std::uint64_t at : {entry.field2, entry.field2 + doc_.header_offset}) {
        if (at >= bytes_.size()) continue;
        parsed = parse_indirect_object(bytes_, static_cast<std::size_t>(at), resolver);
        if (parsed && parsed->id.number == number) break;
        parsed.reset();
        if (doc_.header_offset == 0) break;
      }
      PdfObject object;
      if (parsed) {
        object.id = parsed->id;
        object.body = std::move(parsed->body);
        object.span = parsed->span;
        object.origin = entry.origin;
        for (auto& w : parsed->warnings) doc_.warnings.push_back(std::move(w));
        if (parsed->id.generation != entry.field3) {
          doc_.warnings.push_back("object " + std::to_string(number) +
                                  ": generation differs from its cross-reference entry");
        }
      } else if (const PdfObject* salvaged = latest_salvaged(number)) {
        doc_.warnings.push_back("object " + std::to_string(number) +
                                ": bad cross-reference offset; recovered by scan");
        object = *salvaged;
      } else {
        doc_.warnings.push_back("object " + std::to_string(number) + ": bad cross-reference offset");
        continue;
      }
      if (const Stream* s = object.body.as_stream(); s && s->length_mismatch) {
        doc_.warnings.push_back("object " + to_string(object.id) + ": /Length does not match stream data");
      }
      if (const Stream* s = object.body.as_stream(); s && is_type(s->dict, "XRef")) {
        doc_.structural.insert(object.id);
      }
      doc_.objects[object.id] = std::move(object);
    }
    for (const auto& [number, entry] : entries_) {
      if (entry.type != 2) continue;
      if (entry.field2 > std::numeric_limits<std::uint32_t>::max()) continue;
      const auto container = static_cast<std::uint32_t>(entry.field2);
      const auto* members = members_of(container);
      if (!members) {
        doc_.warnings.push_back("object " + std::to_string(number) + ": object stream " +
                                std::to_string(container) + " unavailable");
        continue;
      }
      const std::pair<ObjectId, Value>* member = nullptr;
      if (entry.field3 < members->size() && (*members)[entry.field3].first.number == number) {
        member = &(*members)[entry.field3];
      } else {
        for (const auto& m : *members) {
          if (m.first.number == number) member = &m;
        }
      }
      if (!member) {
        doc_.warnings.push_back("object " + std::to_string(number) + ": missing from object stream " +
                                std::to_string(container));
        continue;
      }
      add_member(container, *member);
    }
  }

  void add_member(std::uint32_t container, const std::pair<ObjectId, Value>& member) {
    const ObjectId container_id = container_ids_.at(container);
    PdfObject object;
    object.id = member.first;
    object.body = member.second;
    object.origin = Origin::ObjectStream;
    object.container = container;
    object.span = doc_.objects.at(container_id).span;
    doc_.objects[object.id] = std::move(object);
  }

  const std::vector<std::pair<ObjectId, Value>>* members_of(std::uint32_t container) {
    if (const auto it = members_.find(container); it != members_.end()) return &it->second;
    const PdfObject* holder = nullptr;
    for (const auto& [id, object] : doc_.objects) {
      if (id.number == container && object.origin != Origin::ObjectStream) holder = &object;
    }
    if (!holder || !holder->body.as_stream() || !is_type(holder->body.as_stream()->dict, "ObjStm")) {
      return nullptr;
    }
    doc_.structural.insert(holder->id);
    container_ids_[container] = holder->id;
    if (doc_.encrypted || has_encrypt()) {
      members_[container] = {};
      doc_.warnings.push_back("object stream " + std::to_string(container) +
                              " not expanded: document is encrypted");
      return &members_[container];
    }
    members_[container] = expand_object_stream(*holder->body.as_stream(), doc_.warnings);
    return &members_[container];
  }

  bool has_encrypt() const {
    return std::any_of(doc_.trailers.begin(), doc_.trailers.end(),
                       [](const Dict& t) { return t.get("Encrypt") != nullptr; });
  }

  // Objects found by the linear scan but named by no cross-reference entry.
  void add_unindexed_objects() {
    std::vector<ByteRange> spans;
    for (const auto& [id, object] : doc_.objects) {
      if (object.origin != Origin::ObjectStream) spans.push_back(object.span);
    }
    std::sort(spans.begin(), spans.end(),
              [](const ByteRange& a, const ByteRange& b) { return a.begin < b.begin; });
    auto nested = [&](const ByteRange& span) {
      auto it = std::upper_bound(spans.begin(), spans.end(), span.begin,
                                 [](std::size_t v, const ByteRange& r) { return v < r.begin; });
      if (it == spans.begin()) return false;
      --it;
      return span.begin > it->begin && span.begin < it->end;
    };
    std::set<ObjectId> added;
    for (const PdfObject& found : salvage_) {
      if (nested(found.span)) continue;
      if (doc_.objects.count(found.id) && !added.count(found.id)) continue;
      if (const auto it = entries_.find(found.id.number); it != entries_.end() && it->second.type != 0) {
        continue;
      }
      if (added.insert(found.id).second) {
        doc_.warnings.push_back("object " + to_string(found.id) +
                                " is not in any cross-reference section");
      }
      doc_.objects[found.id] = found;
    }
  }

  void load_from_salvage_only() {
    doc_.warnings.push_back("no trailer reachable through startxref; objects recovered by scan");
    for (const PdfObject& found : salvage_) doc_.objects[found.id] = found;
    std::vector<std::pair<std::size_t, Dict>> found_trailers;
    for (std::size_t pos = find_keyword(bytes_, "trailer"); pos != std::string_view::npos;
         pos = find_keyword(bytes_, "trailer", pos + 1)) {
      SyntaxReader reader(bytes_, pos + 7);
      if (auto dict = reader.value(); dict && dict->as_dict()) {
        found_trailers.emplace_back(pos, *dict->as_dict());
      }
    }
    for (const auto& [id, object] : doc_.objects) {
      if (const Stream* s = object.body.as_stream(); s && is_type(s->dict, "XRef")) {
        found_trailers.emplace_back(object.span.begin, s->dict);
        doc_.structural.insert(id);
      }
    }
    std::sort(found_trailers.begin(), found_trailers.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    for (auto& [pos, dict] : found_trailers) doc_.trailers.push_back(std::move(dict));
    if (doc_.trailers.empty()) {
      doc_.salvage_only = true;
      doc_.warnings.push_back("no trailer found; document is salvage-only");
    }
  }

  // Surfaces members of every object stream, including ones no entry names.
  void expand_containers() {
    std::vector<std::uint32_t> containers;
    for (const auto& [id, object] : doc_.objects) {
      if (object.origin == Origin::ObjectStream) continue;
      if (const Stream* s = object.body.as_stream(); s && is_type(s->dict, "ObjStm")) {
        containers.push_back(id.number);
      }
    }
    for (std::uint32_t container : containers) {
      const auto* members = members_of(container);
      if (!members) continue;
      for (const auto& member : *members) {
        if (doc_.objects.count(member.first)) continue;
        const auto entry = entries_.find(member.first.number);
        if (entry != entries_.end() && entry->second.type != 0) continue;
        if (!doc_.trailers.empty() && !doc_.salvage_only && !salvage_mode()) {
          doc_.warnings.push_back("object " + to_string(member.first) +
                                  " is not in any cross-reference section");
        }
        add_member(container, member);
      }
    }
  }

  bool salvage_mode() const { return entries_.empty(); }

  // --- layout: comments and end-of-file markers ---------------------------

  void scan_layout() {
    std::vector<ByteRange> spans;
    for (const auto& [id, object] : doc_.objects) {
      if (object.origin != Origin::ObjectStream) spans.push_back(object.span);
    }
    for (const auto& found : salvage_) spans.push_back(found.span);
    std::sort(spans.begin(), spans.end(),
              [](const ByteRange& a, const ByteRange& b) { return a.begin < b.begin; });

    std::optional<std::size_t> final_eof_end;
    std::size_t next_span = 0;
    std::size_t p = 0;
    const std::size_t n = bytes_.size();
    while (p < n) {
      while (next_span < spans.size() && spans[next_span].end <= p) ++next_span;
      if (next_span < spans.size() && spans[next_span].begin <= p) {
        p = spans[next_span].end;
        continue;
      }
      const char c = bytes_[p];
      if (c == '%') {
        std::size_t e = p + 1;
        while (e < n && bytes_[e] != '\n' && bytes_[e] != '\r') ++e;
        Comment comment{ByteRange{p, e}, std::string(bytes_.substr(p + 1, e - p - 1))};
        if (comment.text.rfind("%EOF", 0) == 0) {
          doc_.eof_positions.push_back(p);
          final_eof_end = marker_end(p + 5);
          if (startxref_keyword_ && p > *startxref_keyword_) break;
        } else {
          doc_.comments.push_back(std::move(comment));
        }
        p = e;
      } else if (c == '(') {
        p = skip_literal(p);
      } else if (c == '<' && p + 1 < n && bytes_[p + 1] != '<') {
        const std::size_t close = bytes_.find('>', p);
        p = close == std::string_view::npos ? n : close + 1;
      } else {
        ++p;
      }
    }
    if (!final_eof_end) {
      doc_.tail_offset = n;
      doc_.warnings.push_back("no %%EOF marker");
      return;
    }
    while (!doc_.comments.empty() && doc_.comments.back().span.begin >= *final_eof_end) {
      doc_.comments.pop_back();
    }
    doc_.tail_offset = *final_eof_end;
    doc_.tail_bytes = std::string(bytes_.substr(*final_eof_end));
  }

  // The marker owns one end-of-line sequence right after it.
  std::size_t marker_end(std::size_t p) const {
    if (p < bytes_.size() && bytes_[p] == '\r') ++p;
    else if (p < bytes_.size() && bytes_[p] == '\n') return p + 1;
    if (p < bytes_.size() && bytes_[p] == '\n' && bytes_[p - 1] == '\r') ++p;
    return p;
  }

  std::size_t skip_literal(std::size_t p) const {
    int depth = 0;
    while (p < bytes_.size()) {
      const char c = bytes_[p++];
      if (c == '\\') {
        ++p;
      } else if (c == '(') {
        ++depth;
      } else if (c == ')' && --depth == 0) {
        return p;
      }
    }
    return p;
  }

  std::string_view bytes_;
  PdfDocument& doc_;
  std::map<std::uint32_t, XrefEntry> entries_;
  std::vector<PdfObject> salvage_;
  std::unordered_map<std::uint32_t, std::vector<std::size_t>> salvage_by_number_;
  std::map<std::uint32_t, std::vector<std::pair<ObjectId, Value>>> members_;
  std::map<std::uint32_t, ObjectId> container_ids_;
  std::optional<std::size_t> startxref_keyword_;
  bool resolving_length_ = false;
};

}  // namespace

std::string_view origin_name(Origin origin) {
  switch (origin) {
    case Origin::XrefTable: return "xref_table";
    case Origin::XrefStream: return "xref_stream";
    case Origin::ObjectStream: return "object_stream";
    case Origin::SalvageScan: return "salvage_scan";
  }
  return "xref_table";
}

PdfDocument parse_pdf(std::string_view bytes) {
  const std::size_t header = bytes.substr(0, kHeaderWindow + kHeader.size()).find(kHeader);
  if (header == std::string_view::npos || header > kHeaderWindow) throw PdfParseError("not a PDF");
  PdfDocument doc;
  doc.header_offset = header;
  Loader(bytes, doc).run();
  return doc;
}

std::vector<PdfObject> recover_objects(std::string_view bytes) {
  std::vector<PdfObject> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t hit = find_keyword(bytes, "obj", pos);
    if (hit == std::string_view::npos) break;
    pos = hit + 3;
    // Walk back over `N G ` to the start of the header.
    std::size_t j = hit;
    auto skip_space_back = [&] {
      const std::size_t before = j;
      while (j > 0 && is_pdf_space(bytes[j - 1])) --j;
      return j < before;
    };
    auto skip_digits_back = [&] {
      const std::size_t before = j;
      while (j > 0 && bytes[j - 1] >= '0' && bytes[j - 1] <= '9') --j;
      return j < before;
    };
    if (!skip_space_back() || !skip_digits_back() || !skip_space_back() || !skip_digits_back()) {
      continue;
    }
    if (j > 0 && !is_pdf_space(bytes[j - 1]) && !is_pdf_delimiter(bytes[j - 1])) continue;
    auto parsed = parse_indirect_object(bytes, j);
    if (!parsed) continue;
    PdfObject object;
    object.id = parsed->id;
    object.body = std::move(parsed->body);
    object.origin = Origin::SalvageScan;
    object.span = parsed->span;
    pos = std::max(pos, parsed->span.end);
    out.push_back(std::move(object));
  }
  return out;
}

const PdfObject* find_object(const PdfDocument& doc, ObjectId id) {
  const auto it = doc.objects.find(id);
  return it == doc.objects.end() ? nullptr : &it->second;
}

const Value& resolve(const PdfDocument& doc, const Value& value, std::vector<std::string>* warnings) {
  static const Value kNull{Null{}};
  const Reference* ref = value.as_reference();
  if (!ref) return value;
  if (const PdfObject* object = find_object(doc, ref->id)) return object->body;
  if (warnings) warnings->push_back("dangling reference " + to_string(ref->id) + " R");
  return kNull;
}

DecodeResult decode_stream(const PdfDocument& doc, const PdfObject& object, std::size_t max_output) {
  const Stream* stream = object.body.as_stream();
  DecodeResult result;
  if (!stream) {
    result.status = DecodeStatus::Corrupt;
    result.error = "object " + to_string(object.id) + " is not a stream";
    return result;
  }
  if (doc.encrypted && !is_type(stream->dict, "XRef")) {
    result.status = DecodeStatus::Encrypted;
    result.data = stream->raw;
    result.error = "document is encrypted";
    return result;
  }
  return decode_stream(*stream, max_output);
}

std::string dump_objects(const PdfDocument& doc) {
  std::string out;
  for (const auto& [id, object] : doc.objects) {
    out += std::to_string(id.number) + " " + std::to_string(id.generation) + " ";
    out += std::string(kind_name(object.body)) + " ";
    out += std::to_string(object.span.begin) + ".." + std::to_string(object.span.end) + " [";
    out += std::string(origin_name(object.origin));
    if (object.container) out += ",container=" + std::to_string(*object.container);
    if (const Stream* s = object.body.as_stream(); s && s->length_mismatch) out += ",length_mismatch";
    if (doc.structural.count(id)) out += ",structural";
    out += "]\n";
  }
  return out;
}

std::vector<std::pair<ObjectId, Value>> expand_object_stream(const Stream& container,
                                                             std::vector<std::string>& warnings) {
  std::vector<std::pair<ObjectId, Value>> members;
  const DecodeResult decoded = decode_stream(container);
  if (!decoded.ok()) {
    warnings.push_back("object stream does not decode: " +
                       std::string(decode_status_name(decoded.status)));
    return members;
  }
  const Value* n_value = container.dict.get("N");
  const Value* first_value = container.dict.get("First");
  const std::int64_t count = n_value ? n_value->as_int().value_or(-1) : -1;
  const std::int64_t first = first_value ? first_value->as_int().value_or(-1) : -1;
  if (count < 0 || first < 0 || static_cast<std::uint64_t>(first) > decoded.data.size()) {
    warnings.push_back("object stream without usable /N and /First");
    return members;
  }
  const std::string& data = decoded.data;
  SyntaxReader header(std::string_view(data).substr(0, static_cast<std::size_t>(first)));
  for (std::int64_t i = 0; i < count; ++i) {
    const auto number = header.integer();
    const auto offset = header.integer();
    if (!number || !offset || *number < 0 || *offset < 0 ||
        *number > std::numeric_limits<std::uint32_t>::max()) {
      warnings.push_back("object stream header is truncated");
      break;
    }
    const std::uint64_t at = static_cast<std::uint64_t>(first) + static_cast<std::uint64_t>(*offset);
    if (at >= data.size()) {
      warnings.push_back("object stream member offset out of range");
      continue;
    }
    SyntaxReader reader(data, static_cast<std::size_t>(at));
    auto value = reader.value();
    if (!value) {
      warnings.push_back("object stream member " + std::to_string(*number) + " does not parse");
      continue;
    }
    members.emplace_back(ObjectId{static_cast<std::uint32_t>(*number), 0}, std::move(*value));
  }
  return members;
}

}  // namespace texguard::pdf
