#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "texguard/pdf/object.hpp"

namespace texguard::pdf {

enum class DecodeStatus { Ok, UnsupportedFilter, Encrypted, Corrupt };

std::string_view decode_status_name(DecodeStatus status);

struct DecodeResult {
  DecodeStatus status = DecodeStatus::Ok;
  std::string data;      // decoded bytes; raw bytes when not Ok
  std::string filter;    // offending filter for UnsupportedFilter
  std::string error;     // Corrupt: what went wrong
  std::size_t error_offset = 0;  // Corrupt: byte offset into the raw stream data
  std::vector<std::string> warnings;

  bool ok() const { return status == DecodeStatus::Ok; }
};

// Applies /Filter and /DecodeParms. Only FlateDecode (alone or chained) is
// supported, with PNG and TIFF predictors.
DecodeResult decode_stream(const Stream& stream,
                           std::size_t max_output = std::size_t{1} << 30);

// Reverses a /Predictor. Returns nullopt with `error` set on bad parameters.
std::optional<std::string> undo_predictor(std::string_view data, const Dict& params,
                                          std::string& error);

}  // namespace texguard::pdf
