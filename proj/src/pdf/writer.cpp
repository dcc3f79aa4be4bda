#include "texguard/pdf/writer.hpp"

#include <zlib.h>

#include <cstdio>
#include <stdexcept>

namespace texguard::pdf {

std::string deflate_bytes(std::string_view data, int level) {
  uLongf size = compressBound(static_cast<uLong>(data.size()));
  std::string out(size, '\0');
  const int rc = compress2(reinterpret_cast<Bytef*>(out.data()), &size,
                           reinterpret_cast<const Bytef*>(data.data()),
                           static_cast<uLong>(data.size()), level);
  if (rc != Z_OK) throw std::runtime_error("zlib compress2 failed");
  out.resize(size);
  return out;
}

PdfWriter::PdfWriter(std::string_view version, bool binary_marker) {
  out_ = "%PDF-" + std::string(version) + "\n";
  if (binary_marker) out_ += "%\xE2\xE3\xCF\xD3\n";
}

void PdfWriter::comment(std::string_view text) {
  out_ += '%';
  out_ += text;
  out_ += '\n';
}

void PdfWriter::raw(std::string_view bytes) { out_ += bytes; }

void PdfWriter::add(std::uint32_t number, const Value& body, std::uint16_t generation) {
  revision_[number] = Entry{1, out_.size(), generation};
  max_number_ = std::max(max_number_, number);
  out_ += std::to_string(number) + " " + std::to_string(generation) + " obj\n";
  out_ += serialize(body);
  out_ += "\nendobj\n";
}

void PdfWriter::add_compressed(std::uint32_t number, const Value& body) {
  if (body.as_stream()) throw std::invalid_argument("streams cannot live in an object stream");
  max_number_ = std::max(max_number_, number);
  pending_compressed_.emplace_back(number, body);
}

void PdfWriter::finish_revision(Dict trailer, XrefStyle style, bool compress_xref) {
  if (!pending_compressed_.empty()) {
    if (style != XrefStyle::Stream) {
      throw std::logic_error("object streams need a cross-reference stream");
    }
    const std::uint32_t container = max_number_ + 1;
    std::string header;
    std::string body;
    for (const auto& [number, value] : pending_compressed_) {
      header += std::to_string(number) + " " + std::to_string(body.size()) + " ";
      body += serialize(value) + "\n";
    }
    Stream objstm;
    objstm.dict.set("Type", Name{"ObjStm"});
    objstm.dict.set("N", pending_compressed_.size());
    objstm.dict.set("First", header.size());
    objstm.dict.set("Filter", Name{"FlateDecode"});
    objstm.raw = deflate_bytes(header + body);
    add(container, Value(std::move(objstm)));
    for (std::size_t i = 0; i < pending_compressed_.size(); ++i) {
      revision_[pending_compressed_[i].first] = Entry{2, container, static_cast<std::uint32_t>(i)};
    }
    pending_compressed_.clear();
  }

  if (last_xref_) trailer.set("Prev", *last_xref_);
  trailer.erase("Size");

  if (style == XrefStyle::Table) {
    const std::size_t xref_at = out_.size();
    trailer.set("Size", max_number_ + 1);
    out_ += "xref\n";
    std::map<std::uint32_t, Entry> rows = revision_;
    if (first_revision_) rows[0] = Entry{0, 0, 65535};
    char line[32];
    for (auto it = rows.begin(); it != rows.end();) {
      auto run_end = it;
      std::uint32_t count = 0;
      while (run_end != rows.end() && run_end->first == it->first + count) {
        ++run_end;
        ++count;
      }
      out_ += std::to_string(it->first) + " " + std::to_string(count) + "\n";
      for (; it != run_end; ++it) {
        std::snprintf(line, sizeof line, "%010llu %05u %c\r\n",
                      static_cast<unsigned long long>(it->second.field2),
                      static_cast<unsigned>(it->second.field3), it->second.type == 0 ? 'f' : 'n');
        out_ += line;
      }
    }
    out_ += "trailer\n" + serialize(Value(trailer)) + "\n";
    last_xref_ = xref_at;
  } else {
    const std::uint32_t self = max_number_ + 1;
    const std::size_t xref_at = out_.size();
    revision_[self] = Entry{1, xref_at, 0};
    max_number_ = self;
    std::map<std::uint32_t, Entry> rows = revision_;
    if (first_revision_) rows[0] = Entry{0, 0, 65535};
    std::string table;
    Array index;
    for (auto it = rows.begin(); it != rows.end();) {
      auto run_end = it;
      std::uint32_t count = 0;
      while (run_end != rows.end() && run_end->first == it->first + count) {
        ++run_end;
        ++count;
      }
      index.push_back(Value(it->first));
      index.push_back(Value(count));
      for (; it != run_end; ++it) {
        table += static_cast<char>(it->second.type);
        for (int shift = 24; shift >= 0; shift -= 8) {
          table += static_cast<char>((it->second.field2 >> shift) & 0xff);
        }
        table += static_cast<char>((it->second.field3 >> 8) & 0xff);
        table += static_cast<char>(it->second.field3 & 0xff);
      }
    }
    Stream xref;
    xref.dict = trailer;
    xref.dict.set("Type", Name{"XRef"});
    xref.dict.set("Size", max_number_ + 1);
    xref.dict.set("W", Array{Value(1), Value(4), Value(2)});
    xref.dict.set("Index", std::move(index));
    if (compress_xref) {
      // PNG Up rows, as most producers write them.
      constexpr std::size_t kRow = 7;
      std::string filtered;
      std::string previous(kRow, '\0');
      for (std::size_t r = 0; r + kRow <= table.size(); r += kRow) {
        filtered += '\x02';
        for (std::size_t k = 0; k < kRow; ++k) {
          filtered += static_cast<char>(table[r + k] - previous[k]);
        }
        previous = table.substr(r, kRow);
      }
      Dict parms;
      parms.set("Predictor", 12);
      parms.set("Columns", static_cast<int>(kRow));
      xref.dict.set("Filter", Name{"FlateDecode"});
      xref.dict.set("DecodeParms", std::move(parms));
      xref.raw = deflate_bytes(filtered);
    } else {
      xref.raw = std::move(table);
    }
    out_ += std::to_string(self) + " 0 obj\n" + serialize(Value(std::move(xref))) + "\nendobj\n";
    last_xref_ = xref_at;
  }
  out_ += "startxref\n" + std::to_string(*last_xref_) + "\n%%EOF\n";
  revision_.clear();
  first_revision_ = false;
}

}  // namespace texguard::pdf
