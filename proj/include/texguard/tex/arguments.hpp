#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "texguard/tex/token.hpp"

namespace texguard::tex {

// Syntactic argument readers shared by the project resolver and the rule
// engine. They look at tokens only; nothing is expanded.

// First index >= `from` whose token is not a comment, a line end or a blank
// text run. Returns tokens.size() when there is none.
std::size_t next_significant(const TokenStream& stream, std::size_t from);

// Last index < `before` that is significant, or npos.
std::size_t previous_significant(const TokenStream& stream, std::size_t before);

struct GroupArgument {
  ByteRange inner;       // bytes between the braces
  ByteRange outer;       // including the braces
  std::size_t next = 0;  // token index after the closing brace
  bool closed = false;   // false when the source ended first
};

// `open` must index a BeginGroup token.
GroupArgument read_group(const TokenStream& stream, std::size_t open, std::size_t source_size);

struct FileArgument {
  std::string name;
  ByteRange span;        // where the name sits in the source
  ByteRange extent;      // from the first argument byte to the end of the name
  std::size_t next = 0;  // token index to resume scanning from
};

enum class FileSyntax {
  Plain,       // \input{name} or \input name
  Options,     // \lstinputlisting[opts]{name}
  StreamOpen,  // \openin\stream=name, \openout5 name, \openin\f{name}
};

// Reads the file-name argument following the command at `command`. Returns
// nullopt when the name is not literal (e.g. built from a macro).
std::optional<FileArgument> read_file_argument(const TokenStream& stream, std::string_view source,
                                               std::size_t command, FileSyntax syntax);

}  // namespace texguard::tex
