#include "texguard/forensics/synth.hpp"

#include <stdexcept>

#include "texguard/pdf/writer.hpp"

namespace texguard::forensics {

namespace {

using pdf::Array;
using pdf::Dict;
using pdf::Name;
using pdf::PdfWriter;
using pdf::Reference;
using pdf::Stream;
using pdf::Value;

Reference ref(std::uint32_t number) { return Reference{{number, 0}}; }

Dict make_dict(std::initializer_list<std::pair<const char*, Value>> items) {
  Dict d;
  for (const auto& [k, v] : items) d.set(k, v);
  return d;
}

Array media_box() { return Array{Value(0), Value(0), Value(612), Value(792)}; }

Stream content_stream(std::string data, bool compress) {
  Stream s;
  if (compress) {
    s.dict.set("Filter", Name{"FlateDecode"});
    s.raw = pdf::deflate_bytes(data);
  } else {
    s.raw = std::move(data);
  }
  return s;
}

// Literal string body; CR and LF are escaped so they survive EOL normalisation.
std::string escape_literal(std::string_view bytes) {
  std::string out;
  out.reserve(bytes.size() + bytes.size() / 8);
  for (char c : bytes) {
    switch (c) {
      case '(': out += "\\("; break;
      case ')': out += "\\)"; break;
      case '\\': out += "\\\\"; break;
      case '\r': out += "\\r"; break;
      case '\n': out += "\\n"; break;
      default: out += c;
    }
  }
  return out;
}

Dict helvetica() {
  return make_dict({{"Type", Name{"Font"}}, {"Subtype", Name{"Type1"}}, {"BaseFont", Name{"Helvetica"}}});
}

Dict root_trailer() { return make_dict({{"Root", ref(1)}}); }

// Catalog, page tree and one page whose content is object 4.
void add_page_skeleton(PdfWriter& w, const Dict& resources) {
  w.add(1, make_dict({{"Type", Name{"Catalog"}}, {"Pages", ref(2)}}));
  w.add(2, make_dict({{"Type", Name{"Pages"}}, {"Kids", Array{ref(3)}}, {"Count", 1}}));
  w.add(3, make_dict({{"Type", Name{"Page"}},
                      {"Parent", ref(2)},
                      {"MediaBox", media_box()},
                      {"Resources", resources},
                      {"Contents", ref(4)}}));
}

}  // namespace

std::string synthesize_fixture(std::string_view payload, const SynthOptions& options) {
  if (payload.size() > kMaxSynthPayload) throw std::invalid_argument("payload larger than 16 MiB");
  PdfWriter w("1.5");
  switch (options.channel) {
    case Channel::UnindexedStream: {
      add_page_skeleton(w, Dict{});
      w.add(4, content_stream("", false));
      w.add(5, content_stream(std::string(payload), options.compress));
      w.finish_revision(root_trailer());
      break;
    }
    case Channel::WhiteText: {
      add_page_skeleton(w, make_dict({{"Font", make_dict({{"F1", ref(5)}})}}));
      std::string text = "BT /F1 12 Tf 1 1 1 rg 72 720 Td (";
      text += escape_literal(payload);
      text += ") Tj ET";
      w.add(4, content_stream(std::move(text), options.compress));
      w.add(5, helvetica());
      w.finish_revision(root_trailer());
      break;
    }
    case Channel::Comment: {
      add_page_skeleton(w, Dict{});
      w.add(4, content_stream("", false));
      w.comment(to_hex(payload));
      w.finish_revision(root_trailer());
      break;
    }
    case Channel::PostEof: {
      add_page_skeleton(w, Dict{});
      w.add(4, content_stream("", false));
      w.finish_revision(root_trailer());
      w.raw(payload);
      break;
    }
  }
  return w.bytes();
}

std::vector<std::pair<std::string, std::string>> clean_corpus() {
  std::vector<std::pair<std::string, std::string>> corpus;

  {
    PdfWriter w("1.4");
    w.comment("short producer note");
    add_page_skeleton(w, Dict{});
    w.add(4, content_stream("", false));
    w.finish_revision(root_trailer());
    corpus.emplace_back("blank", w.bytes());
  }
  {
    PdfWriter w("1.5");
    add_page_skeleton(w, make_dict({{"Font", make_dict({{"F1", ref(5)}})}}));
    w.add(4, content_stream("BT /F1 12 Tf 0 0 0 rg 72 720 Td (Quarterly report) Tj "
                            "0 -14 Td [(Kerned) -250 (words)] TJ 0.5 g (grey note) ' ET",
                            true));
    w.add(5, helvetica());
    w.add(6, make_dict({{"Title", pdf::String{"Report", false}}, {"Producer", pdf::String{"texguard", false}}}));
    Dict trailer = root_trailer();
    trailer.set("Info", ref(6));
    w.finish_revision(trailer);
    corpus.emplace_back("visible_text", w.bytes());
  }
  {
    // Two pages, compressed object stream and cross-reference stream.
    PdfWriter w("1.7");
    w.add_compressed(1, make_dict({{"Type", Name{"Catalog"}}, {"Pages", ref(2)}}));
    w.add_compressed(2, make_dict({{"Type", Name{"Pages"}}, {"Kids", Array{ref(3), ref(6)}}, {"Count", 2},
                                   {"Resources", make_dict({{"Font", make_dict({{"F1", ref(5)}})}})}}));
    w.add_compressed(3, make_dict({{"Type", Name{"Page"}}, {"Parent", ref(2)}, {"MediaBox", media_box()},
                                   {"Contents", ref(4)}}));
    w.add_compressed(5, helvetica());
    w.add_compressed(6, make_dict({{"Type", Name{"Page"}}, {"Parent", ref(2)}, {"MediaBox", media_box()},
                                   {"Contents", Array{ref(7), ref(8)}}}));
    w.add(4, content_stream("BT /F1 10 Tf 72 700 Td (page one) Tj ET", true));
    w.add(7, content_stream("BT /F1 10 Tf 72 700 Td", false));
    w.add(8, content_stream("(page two, split content) Tj ET", true));
    w.finish_revision(root_trailer(), pdf::XrefStyle::Stream, true);
    corpus.emplace_back("object_streams", w.bytes());
  }
  {
    // Incremental update replacing the page content.
    PdfWriter w("1.4");
    add_page_skeleton(w, make_dict({{"Font", make_dict({{"F1", ref(5)}})}}));
    w.add(4, content_stream("BT /F1 12 Tf 72 720 Td (draft) Tj ET", false));
    w.add(5, helvetica());
    w.finish_revision(root_trailer());
    w.add(4, content_stream("BT /F1 12 Tf 72 720 Td (final) Tj ET", false));
    w.finish_revision(root_trailer());
    corpus.emplace_back("incremental_update", w.bytes());
  }
  {
    // White box painted, then restored black text; image and form XObjects;
    // catalog metadata.
    PdfWriter w("1.6");
    w.add(1, make_dict({{"Type", Name{"Catalog"}}, {"Pages", ref(2)}, {"Metadata", ref(9)}}));
    w.add(2, make_dict({{"Type", Name{"Pages"}}, {"Kids", Array{ref(3)}}, {"Count", 1}}));
    Dict xobjects = make_dict({{"Im1", ref(6)}, {"Fm1", ref(7)}});
    w.add(3, make_dict({{"Type", Name{"Page"}},
                        {"Parent", ref(2)},
                        {"MediaBox", media_box()},
                        {"Resources", make_dict({{"Font", make_dict({{"F1", ref(5)}})}, {"XObject", xobjects}})},
                        {"Contents", ref(4)}}));
    w.add(4, content_stream("q 1 1 1 rg 0 0 612 792 re f Q "
                            "BT /F1 12 Tf 0.1 0.1 0.1 rg 72 720 Td (caption) Tj ET "
                            "q 100 0 0 100 72 500 cm /Im1 Do Q /Fm1 Do "
                            "BI /W 2 /H 1 /BPC 8 /CS /G ID \xff\xfe EI "
                            "BT /DeviceCMYK cs 0 0 0 1 sc (cmyk black) Tj ET",
                            true));
    w.add(5, helvetica());
    Stream image;
    image.dict = make_dict({{"Type", Name{"XObject"}}, {"Subtype", Name{"Image"}}, {"Width", 4}, {"Height", 4},
                            {"ColorSpace", Name{"DeviceRGB"}}, {"BitsPerComponent", 8},
                            {"Filter", Name{"FlateDecode"}}});
    std::string pixels;
    for (int i = 0; i < 48; ++i) pixels += static_cast<char>((i * 37) & 0xff);
    image.raw = pdf::deflate_bytes(pixels);
    w.add(6, image);
    Stream form = content_stream("BT /F1 8 Tf 0 g 72 60 Td (footer) Tj ET", false);
    form.dict.set("Type", Name{"XObject"});
    form.dict.set("Subtype", Name{"Form"});
    form.dict.set("BBox", media_box());
    form.dict.set("Resources", make_dict({{"Font", make_dict({{"F1", ref(5)}})}}));
    w.add(7, form);
    Stream metadata;
    metadata.dict = make_dict({{"Type", Name{"Metadata"}}, {"Subtype", Name{"XML"}}});
    metadata.raw = "<?xpacket begin=\"\"?><x:xmpmeta xmlns:x=\"adobe:ns:meta/\"></x:xmpmeta><?xpacket end=\"r\"?>";
    w.add(9, metadata);
    w.finish_revision(root_trailer());
    corpus.emplace_back("graphics_state", w.bytes());
  }
  return corpus;
}

std::size_t extract(const HiddenCandidate& candidate, const std::string& path) {
  write_file(path, candidate.payload());
  return candidate.payload().size();
}

}  // namespace texguard::forensics
