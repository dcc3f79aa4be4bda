#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace texguard::forensics {

enum class HiddenReason { WhiteFill, InvisibleMode };

// Text shown while invisible. Consecutive hidden show operators inside one
// BT/ET pair form a single run.
struct InvisibleText {
  std::string bytes;
  std::size_t offset = 0;  // of the first show operator's operands
  HiddenReason reason = HiddenReason::WhiteFill;
};

struct ContentScan {
  std::vector<InvisibleText> runs;
  std::string error;  // set when the stream stopped parsing early
};

// Interprets the color and text-state operators of a decoded content stream.
// Fill counts as white when every gray or RGB component is at least
// `white_threshold`, or every CMYK component is at most 1 - `white_threshold`.
// Text rendering mode 3 is invisible regardless of color.
ContentScan find_invisible_text(std::string_view content, double white_threshold);

}  // namespace texguard::forensics
