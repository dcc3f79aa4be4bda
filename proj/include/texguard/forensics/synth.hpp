#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "texguard/forensics/candidate.hpp"

namespace texguard::forensics {

inline constexpr std::size_t kMaxSynthPayload = std::size_t{16} << 20;

struct SynthOptions {
  Channel channel = Channel::UnindexedStream;
  // Deflates the carrying stream. No effect on comment and post_eof.
  bool compress = false;
};

// One blank-looking page hiding `payload` through the chosen channel. The
// unindexed stream is listed in the cross-reference table but referenced by
// nothing. Throws std::invalid_argument above kMaxSynthPayload.
std::string synthesize_fixture(std::string_view payload, const SynthOptions& options);

// Benign documents exercising the same structures without hiding anything.
std::vector<std::pair<std::string, std::string>> clean_corpus();

// Writes candidate.payload() to `path`; returns the byte count.
std::size_t extract(const HiddenCandidate& candidate, const std::string& path);

}  // namespace texguard::forensics
