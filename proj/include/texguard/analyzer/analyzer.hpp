#pragma once

#include <string_view>
#include <vector>

#include "texguard/analyzer/finding.hpp"
#include "texguard/analyzer/policy.hpp"
#include "texguard/tex/token.hpp"

namespace texguard::analyzer {

// Runs every rule over a lexed source. Findings are ordered by span start and
// are a pure function of (stream, source, policy). A restricted capability
// downgrades the disposition of its findings; it never removes them.
//
//   R1  \write18 shell escape, with or without \immediate
//   R2  \input, \include, \openin and friends reading outside the project
//   R3  \openout, \newwrite, \write to a file stream
//   R4  Lua execution (\directlua, \luaexec, \latelua, luacode)
//   R5  output hiding: \pdfobj, compression switched off, white text
//   R6  sensitive path or reconnaissance command inside R1-R4 evidence
//   R7  \catcode reassignment
//   W1  control word outside the whitelist (whitelist mode)
std::vector<Finding> analyze(const tex::TokenStream& stream, std::string_view source,
                             const Policy& policy);

}  // namespace texguard::analyzer
