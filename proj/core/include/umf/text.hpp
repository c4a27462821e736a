#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace umf {

/// One whitespace-delimited token with terminal punctuation stripped.
/// `offset` is the byte offset of the token start in the original string, so
/// suffix matches can be located exactly in the source text.
struct Token {
  std::string text;
  std::size_t offset = 0;
};

/// Unicode NFC via ICU. Profile markers, lexicon forms and candidate text are
/// all normalized through this before any matching.
std::string nfc(std::string_view utf8);

/// Whitespace-split tokens with terminal punctuation stripped per token.
/// Throws EmptyText when no token survives.
std::vector<Token> tokenize_target(std::string_view text);

/// Lowercased source-language tokens (for cue detection and sense lookup).
std::vector<std::string> source_tokens(std::string_view text);

/// Codepoint count, skipping zero-width joiners/non-joiners.
std::size_t codepoint_count(std::string_view utf8);

bool token_ends_with(std::string_view token, std::string_view suffix);

std::string ascii_lower(std::string_view s);
std::string trim(std::string_view s);

}  // namespace umf
