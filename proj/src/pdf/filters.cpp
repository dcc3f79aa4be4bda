#include "texguard/pdf/filters.hpp"

#include <algorithm>
#include <cstdlib>

#include "texguard/pdf/inflate.hpp"

namespace texguard::pdf {

namespace {

std::int64_t param(const Dict& params, std::string_view key, std::int64_t fallback) {
  const Value* v = params.get(key);
  if (!v) return fallback;
  return v->as_int().value_or(fallback);
}

unsigned char paeth(int a, int b, int c) {
  const int p = a + b - c;
  const int pa = std::abs(p - a);
  const int pb = std::abs(p - b);
  const int pc = std::abs(p - c);
  if (pa <= pb && pa <= pc) return static_cast<unsigned char>(a);
  if (pb <= pc) return static_cast<unsigned char>(b);
  return static_cast<unsigned char>(c);
}

}  // namespace

std::string_view decode_status_name(DecodeStatus status) {
  switch (status) {
    case DecodeStatus::Ok: return "ok";
    case DecodeStatus::UnsupportedFilter: return "unsupported_filter";
    case DecodeStatus::Encrypted: return "encrypted";
    case DecodeStatus::Corrupt: return "corrupt";
  }
  return "";
}

std::optional<std::string> undo_predictor(std::string_view data, const Dict& params,
                                          std::string& error) {
  const std::int64_t predictor = param(params, "Predictor", 1);
  if (predictor == 1) return std::string(data);
  const std::int64_t colors = param(params, "Colors", 1);
  const std::int64_t bpc = param(params, "BitsPerComponent", 8);
  const std::int64_t columns = param(params, "Columns", 1);
  if (colors < 1 || colors > 32 || columns < 1 || columns > (1 << 24) ||
      (bpc != 1 && bpc != 2 && bpc != 4 && bpc != 8 && bpc != 16)) {
    error = "bad predictor parameters";
    return std::nullopt;
  }
  const std::size_t bpp = static_cast<std::size_t>(std::max<std::int64_t>(1, colors * bpc / 8));
  const std::size_t row_bytes = static_cast<std::size_t>((colors * bpc * columns + 7) / 8);

  if (predictor == 2) {
    if (bpc != 8) {
      error = "TIFF predictor supports 8 bits per component only";
      return std::nullopt;
    }
    std::string out(data);
    for (std::size_t row = 0; row < out.size(); row += row_bytes) {
      const std::size_t end = std::min(out.size(), row + row_bytes);
      for (std::size_t i = row + bpp; i < end; ++i) {
        out[i] = static_cast<char>(static_cast<unsigned char>(out[i]) +
                                   static_cast<unsigned char>(out[i - bpp]));
      }
    }
    return out;
  }
  if (predictor < 10 || predictor > 15) {
    error = "unknown predictor " + std::to_string(predictor);
    return std::nullopt;
  }
  std::string out;
  out.reserve(data.size());
  std::string previous(row_bytes, '\0');
  std::string current(row_bytes, '\0');
  std::size_t pos = 0;
  while (pos < data.size()) {
    const auto type = static_cast<unsigned char>(data[pos++]);
    const std::size_t take = std::min(row_bytes, data.size() - pos);
    std::fill(current.begin(), current.end(), '\0');
    for (std::size_t i = 0; i < take; ++i) current[i] = data[pos + i];
    pos += take;
    for (std::size_t i = 0; i < row_bytes; ++i) {
      const int x = static_cast<unsigned char>(current[i]);
      const int a = i >= bpp ? static_cast<unsigned char>(current[i - bpp]) : 0;
      const int b = static_cast<unsigned char>(previous[i]);
      const int c = i >= bpp ? static_cast<unsigned char>(previous[i - bpp]) : 0;
      int value = x;
      switch (type) {
        case 0: break;
        case 1: value = x + a; break;
        case 2: value = x + b; break;
        case 3: value = x + (a + b) / 2; break;
        case 4: value = x + paeth(a, b, c); break;
        default:
          error = "bad PNG row filter " + std::to_string(type);
          return std::nullopt;
      }
      current[i] = static_cast<char>(value & 0xff);
    }
    out.append(current, 0, take);
    std::swap(previous, current);
  }
  return out;
}

DecodeResult decode_stream(const Stream& stream, std::size_t max_output) {
  DecodeResult result;
  std::vector<std::string> filters;
  std::vector<const Dict*> params;
  static const Dict kEmpty;

  if (const Value* filter = stream.dict.get("Filter")) {
    if (auto name = filter->as_name()) {
      filters.emplace_back(*name);
    } else if (const Array* array = filter->as_array()) {
      for (const auto& item : *array) {
        if (auto n = item.as_name()) {
          filters.emplace_back(*n);
        } else {
          filters.emplace_back("?");
        }
      }
    } else if (!filter->is_null()) {
      filters.emplace_back("?");
    }
  }
  if (const Value* dp = stream.dict.get("DecodeParms")) {
    if (const Dict* d = dp->as_dict()) {
      params.push_back(d);
    } else if (const Array* array = dp->as_array()) {
      for (const auto& item : *array) {
        params.push_back(item.as_dict() ? item.as_dict() : &kEmpty);
      }
    }
  }

  std::string data = stream.raw;
  for (std::size_t i = 0; i < filters.size(); ++i) {
    const std::string& name = filters[i];
    if (name != "FlateDecode" && name != "Fl") {
      result.status = DecodeStatus::UnsupportedFilter;
      result.filter = name;
      result.data = stream.raw;
      return result;
    }
    InflateResult inflated = inflate(data, max_output);
    if (!inflated.ok) {
      result.status = DecodeStatus::Corrupt;
      result.error = inflated.error;
      result.error_offset = i == 0 ? inflated.error_offset : 0;
      result.data = stream.raw;
      return result;
    }
    if (inflated.checksum_mismatch) result.warnings.push_back("adler-32 checksum mismatch");
    const Dict& p = i < params.size() ? *params[i] : kEmpty;
    std::string error;
    auto undone = undo_predictor(inflated.data, p, error);
    if (!undone) {
      result.status = DecodeStatus::Corrupt;
      result.error = error;
      result.data = stream.raw;
      return result;
    }
    data = std::move(*undone);
  }
  result.data = std::move(data);
  return result;
}

}  // namespace texguard::pdf
