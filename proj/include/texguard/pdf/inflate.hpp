#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace texguard::pdf {

struct InflateResult {
  bool ok = false;
  std::string data;            // output so far, also on error
  std::string error;           // empty when ok
  std::size_t error_offset = 0;  // input byte where decoding failed
  bool zlib_wrapped = false;
  bool checksum_mismatch = false;  // Adler-32 trailer disagreed
};

inline constexpr std::size_t kDefaultInflateLimit = std::size_t{1} << 30;

// RFC 1950 zlib stream, falling back to a bare RFC 1951 deflate stream when
// the two header bytes are not a valid zlib header. Bytes after the final
// block are ignored. Output beyond `max_output` is an error.
InflateResult inflate(std::string_view input, std::size_t max_output = kDefaultInflateLimit);

// Bare RFC 1951 data.
InflateResult inflate_raw(std::string_view input, std::size_t max_output = kDefaultInflateLimit);

std::uint32_t adler32(std::string_view data);

}  // namespace texguard::pdf
