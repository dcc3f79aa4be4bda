#pragma once

#include <string>
#include <string_view>

#include "texguard/tex/token.hpp"

namespace texguard::tex {

// Lexes with the fixed INITEX-like category table: `\` escape, `{` `}`
// grouping, `%` comment, `$` math shift, `#` parameter, A-Z a-z letters.
// `\catcode` assignments are recorded, never honoured, and no macro is ever
// expanded. Every input byte belongs to exactly one token, so the token spans
// tile the source. Total: malformed or binary input still lexes.
TokenStream tokenize(std::string_view source, std::string source_id = {});

// One token per line: `KIND start..end "slice"`, slice escaped.
std::string dump_tokens(const TokenStream& stream, std::string_view source);

}  // namespace texguard::tex
