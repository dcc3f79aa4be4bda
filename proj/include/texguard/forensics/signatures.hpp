#pragma once

#include <string_view>
#include <vector>

#include "texguard/common/category.hpp"

namespace texguard::forensics {

// Categories whose marker strings occur in `text`. The markers come from the
// usual output of each reconnaissance probe (passwd lines, `Chain INPUT`, PEM
// armour and so on); a match is a hint, not proof. Sorted, no duplicates.
std::vector<Category> match_categories(std::string_view text);

}  // namespace texguard::forensics
