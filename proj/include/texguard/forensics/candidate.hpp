#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "texguard/common/bytes.hpp"
#include "texguard/common/category.hpp"
#include "texguard/pdf/object.hpp"

namespace texguard::forensics {

enum class Channel { UnindexedStream, WhiteText, Comment, PostEof };

enum class Classification { LeakedText, BinaryBlob, BenignSuspect };

std::string_view channel_name(Channel channel);
std::optional<Channel> parse_channel(std::string_view name);
std::string_view classification_name(Classification classification);

using Location = std::variant<pdf::ObjectId, ByteRange>;

// "object 5 0" or "bytes 120..4000".
std::string location_string(const Location& location);

struct HiddenCandidate {
  Channel channel = Channel::UnindexedStream;
  Location location;
  std::string raw;
  std::optional<std::string> decoded;
  Classification classification = Classification::BinaryBlob;
  double printable_ratio = 0.0;
  std::vector<Category> matched_categories;

  // What extraction writes: decoded bytes when present, raw otherwise.
  const std::string& payload() const { return decoded ? *decoded : raw; }
};

struct DetectorOptions {
  std::size_t min_comment_len = 64;
  double white_threshold = 0.95;
  double printable_threshold = 0.85;
  bool unindexed = true;
  bool white_text = true;
  bool comments = true;
  bool post_eof = true;
};

// Fills printable_ratio, classification and matched_categories from payload().
void classify(HiddenCandidate& candidate, const DetectorOptions& options);

}  // namespace texguard::forensics
