#include "umf/text.hpp"

#include <cctype>
#include <cstdint>

#include <unicode/normalizer2.h>
#include <unicode/unistr.h>

#include "umf/errors.hpp"

namespace umf {

namespace {

const icu::Normalizer2& nfc_normalizer() {
  UErrorCode ec = U_ZERO_ERROR;
  const icu::Normalizer2* n = icu::Normalizer2::getNFCInstance(ec);
  if (U_FAILURE(ec) || n == nullptr) {
    throw Error("ICU NFC normalizer unavailable");
  }
  return *n;
}

bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

// Decodes the codepoint starting at `i`; advances `i` past it. Invalid bytes
// decode as U+FFFD one byte at a time so arbitrary input never crashes.
char32_t decode_utf8(std::string_view s, std::size_t& i) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  std::size_t len = 1;
  char32_t cp = 0xFFFD;
  if (b0 < 0x80) {
    cp = b0;
  } else if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    ++i;
    return 0xFFFD;
  }
  if (i + len > s.size()) {
    ++i;
    return 0xFFFD;
  }
  for (std::size_t k = 1; k < len; ++k) {
    const auto b = static_cast<unsigned char>(s[i + k]);
    if ((b & 0xC0) != 0x80) {
      ++i;
      return 0xFFFD;
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  i += len;
  return cp;
}

// Punctuation stripped from token ends: ASCII punctuation plus the sentence
// marks common in the supported scripts (danda, CJK stops, ellipsis, quotes).
bool is_terminal_punct(char32_t cp) {
  if (cp < 0x80) {
    return std::ispunct(static_cast<int>(cp)) != 0;
  }
  switch (cp) {
    case 0x0964:  // devanagari danda
    case 0x0965:
    case 0x3002:  // ideographic full stop
    case 0x3001:
    case 0xFF01:
    case 0xFF1F:
    case 0xFF1B:
    case 0xFF1A:
    case 0xFF0C:
    case 0x2026:  // ellipsis
    case 0x2018:
    case 0x2019:
    case 0x201C:
    case 0x201D:
    case 0x00AB:
    case 0x00BB:
      return true;
    default:
      return false;
  }
}

}  // namespace

std::string nfc(std::string_view utf8) {
  UErrorCode ec = U_ZERO_ERROR;
  icu::UnicodeString in = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
  icu::UnicodeString out = nfc_normalizer().normalize(in, ec);
  if (U_FAILURE(ec)) {
    throw Error("NFC normalization failed");
  }
  std::string result;
  out.toUTF8String(result);
  return result;
}

std::vector<Token> tokenize_target(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    while (i < n && is_ascii_space(text[i])) ++i;
    if (i >= n) break;
    const std::size_t start = i;
    while (i < n && !is_ascii_space(text[i])) ++i;
    std::string_view raw = text.substr(start, i - start);

    // strip terminal punctuation codepoint by codepoint from the end
    std::size_t end = raw.size();
    while (end > 0) {
      // find the start of the last codepoint
      std::size_t cp_start = end - 1;
      while (cp_start > 0 && (static_cast<unsigned char>(raw[cp_start]) & 0xC0) == 0x80) {
        --cp_start;
      }
      std::size_t tmp = cp_start;
      const char32_t cp = decode_utf8(raw, tmp);
      if (tmp == end && is_terminal_punct(cp)) {
        end = cp_start;
      } else {
        break;
      }
    }
    if (end > 0) {
      tokens.push_back(Token{std::string(raw.substr(0, end)), start});
    }
  }
  if (tokens.empty()) {
    throw EmptyText("no tokens in candidate text");
  }
  return tokens;
}

std::vector<std::string> source_tokens(std::string_view text) {
  std::vector<std::string> out;
  try {
    for (const Token& t : tokenize_target(text)) {
      out.push_back(ascii_lower(t.text));
    }
  } catch (const EmptyText&) {
    // empty source yields no tokens; cue detection treats that as no cues
  }
  return out;
}

std::size_t codepoint_count(std::string_view utf8) {
  std::size_t count = 0;
  std::size_t i = 0;
  while (i < utf8.size()) {
    const char32_t cp = decode_utf8(utf8, i);
    if (cp == 0x200C || cp == 0x200D) continue;  // ZWNJ / ZWJ
    ++count;
  }
  return count;
}

bool token_ends_with(std::string_view token, std::string_view suffix) {
  if (suffix.empty() || suffix.size() > token.size()) return false;
  return token.compare(token.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && is_ascii_space(s[b])) ++b;
  while (e > b && is_ascii_space(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace umf
