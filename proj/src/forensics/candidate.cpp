#include "texguard/forensics/candidate.hpp"

#include "texguard/forensics/signatures.hpp"

namespace texguard::forensics {

std::string_view channel_name(Channel channel) {
  switch (channel) {
    case Channel::UnindexedStream: return "unindexed_stream";
    case Channel::WhiteText: return "white_text";
    case Channel::Comment: return "comment";
    case Channel::PostEof: return "post_eof";
  }
  return "unindexed_stream";
}

std::optional<Channel> parse_channel(std::string_view name) {
  for (Channel c : {Channel::UnindexedStream, Channel::WhiteText, Channel::Comment, Channel::PostEof}) {
    if (channel_name(c) == name) return c;
  }
  return std::nullopt;
}

std::string_view classification_name(Classification classification) {
  switch (classification) {
    case Classification::LeakedText: return "leaked_text";
    case Classification::BinaryBlob: return "binary_blob";
    case Classification::BenignSuspect: return "benign_suspect";
  }
  return "binary_blob";
}

std::string location_string(const Location& location) {
  if (const auto* id = std::get_if<pdf::ObjectId>(&location)) return "object " + pdf::to_string(*id);
  const auto& span = std::get<ByteRange>(location);
  return "bytes " + std::to_string(span.begin) + ".." + std::to_string(span.end);
}

void classify(HiddenCandidate& candidate, const DetectorOptions& options) {
  const std::string& data = candidate.payload();
  candidate.printable_ratio = printable_ratio(data);
  candidate.matched_categories = match_categories(data);
  if (data.empty()) {
    candidate.classification = Classification::BenignSuspect;
  } else if (candidate.printable_ratio >= options.printable_threshold) {
    candidate.classification = Classification::LeakedText;
  } else {
    candidate.classification = Classification::BinaryBlob;
  }
}

}  // namespace texguard::forensics
