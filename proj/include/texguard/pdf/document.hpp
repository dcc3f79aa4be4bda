#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "texguard/pdf/filters.hpp"
#include "texguard/pdf/object.hpp"

namespace texguard::pdf {

enum class Origin { XrefTable, XrefStream, ObjectStream, SalvageScan };

std::string_view origin_name(Origin origin);

struct PdfObject {
  ObjectId id;
  Value body;
  Origin origin = Origin::XrefTable;
  std::optional<std::uint32_t> container;  // object stream number for ObjectStream members
  ByteRange span;  // for ObjectStream members: the container's span
};

struct Comment {
  ByteRange span;    // from '%' up to the end-of-line marker
  std::string text;  // without the leading '%'
};

struct PdfDocument {
  std::map<ObjectId, PdfObject> objects;  // newest revision of each id
  std::vector<Dict> trailers;             // newest first
  std::vector<std::size_t> eof_positions;
  std::string tail_bytes;
  std::size_t tail_offset = 0;  // where tail_bytes start
  std::vector<Comment> comments;
  std::vector<std::string> warnings;
  // Cross-reference streams and object-stream containers.
  std::set<ObjectId> structural;
  std::optional<std::size_t> startxref;  // offset named by the startxref in use
  std::size_t header_offset = 0;
  bool encrypted = false;
  bool salvage_only = false;
};

class PdfParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Best-effort parse. Throws PdfParseError only when there is no `%PDF-`
// header in the first kilobyte; every other anomaly is a warning.
PdfDocument parse_pdf(std::string_view bytes);

// Linear `N G obj ... endobj` scan that ignores cross-reference data.
std::vector<PdfObject> recover_objects(std::string_view bytes);

// Newest object with this id, or nullptr.
const PdfObject* find_object(const PdfDocument& doc, ObjectId id);

// One resolution step: references are looked up, anything else is returned
// as is. A dangling reference yields null and, if given, a warning.
const Value& resolve(const PdfDocument& doc, const Value& value,
                     std::vector<std::string>* warnings = nullptr);

// Refuses stream data of encrypted documents.
DecodeResult decode_stream(const PdfDocument& doc, const PdfObject& object,
                           std::size_t max_output = std::size_t{1} << 30);

// `id gen kind begin..end [flags]`, one object per line in id order.
std::string dump_objects(const PdfDocument& doc);

// Members of an /ObjStm container, in container order.
std::vector<std::pair<ObjectId, Value>> expand_object_stream(const Stream& container,
                                                             std::vector<std::string>& warnings);

}  // namespace texguard::pdf
