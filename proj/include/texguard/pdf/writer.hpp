#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "texguard/pdf/object.hpp"

namespace texguard::pdf {

enum class XrefStyle { Table, Stream };

// Deflates with zlib; used for fixtures and object streams.
std::string deflate_bytes(std::string_view data, int level = 9);

// Streams a PDF out revision by revision. Each finish_revision() closes one
// revision with its own cross-reference section, trailer and %%EOF, so calling
// it twice produces an incremental update.
class PdfWriter {
 public:
  explicit PdfWriter(std::string_view version = "1.7", bool binary_marker = true);

  // Emits `%text` and an end-of-line at the current position.
  void comment(std::string_view text);
  void raw(std::string_view bytes);
  // Writes `N G obj ... endobj` immediately.
  void add(std::uint32_t number, const Value& body, std::uint16_t generation = 0);
  // Queues a non-stream object for an object stream written at the next
  // finish_revision(), which must then use XrefStyle::Stream.
  void add_compressed(std::uint32_t number, const Value& body);

  // `trailer` needs /Root; /Size and /Prev are filled in.
  void finish_revision(Dict trailer, XrefStyle style = XrefStyle::Table, bool compress_xref = false);

  const std::string& bytes() const { return out_; }
  std::optional<std::size_t> last_xref_offset() const { return last_xref_; }
  std::uint32_t next_number() const { return max_number_ + 1; }

 private:
  struct Entry {
    int type = 1;
    std::uint64_t field2 = 0;
    std::uint32_t field3 = 0;
  };

  std::string out_;
  std::map<std::uint32_t, Entry> revision_;
  std::vector<std::pair<std::uint32_t, Value>> pending_compressed_;
  std::optional<std::size_t> last_xref_;
  std::uint32_t max_number_ = 0;
  bool first_revision_ = true;
};

}  // namespace texguard::pdf
