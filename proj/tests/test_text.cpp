#include <doctest.h>

#include <random>

#include "support/test_support.hpp"
#include "umf/errors.hpp"
#include "umf/text.hpp"

using namespace umf;
using namespace umf::test;

TEST_SUITE("text") {

TEST_CASE("whitespace tokenization with offsets") {
  const auto tokens = tokenize_target("ළමයි උද්‍යානයේ සෙල්ලම් කරනවා");
  REQUIRE(tokens.size() == 4);
  CHECK(tokens[0].text == "ළමයි");
  CHECK(tokens[3].text == "කරනවා");
  CHECK(tokens[0].offset == 0);
}

TEST_CASE("terminal punctuation is stripped per token") {
  const auto tokens = tokenize_target("a b.");
  REQUIRE(tokens.size() == 2);
  CHECK(tokens[0].text == "a");
  CHECK(tokens[1].text == "b");

  const auto more = tokenize_target("  hello,  world!!  ");
  REQUIRE(more.size() == 2);
  CHECK(more[0].text == "hello");
  CHECK(more[1].text == "world");
}

TEST_CASE("whitespace-only and punctuation-only inputs are EmptyText") {
  CHECK_THROWS_AS(tokenize_target("   "), EmptyText);
  CHECK_THROWS_AS(tokenize_target("!! ?? ..."), EmptyText);
  CHECK_THROWS_AS(tokenize_target(""), EmptyText);
}

TEST_CASE("token offsets locate tokens in the original bytes") {
  const std::string text = "one  two, three!";
  for (const Token& t : tokenize_target(text)) {
    CHECK(text.substr(t.offset, t.text.size()) == t.text);
  }
}

TEST_CASE("codepoint count skips zero-width joiners") {
  CHECK(codepoint_count("abc") == 3);
  CHECK(codepoint_count("කරනවා") == 5);
  CHECK(codepoint_count("උද්‍යානයේ") == 8);  // contains a ZWJ
}

TEST_CASE("nfc composes decomposed sinhala vowel signs") {
  const std::string decomposed = "ේ";  // kombuva + virama
  CHECK(nfc(decomposed) == "ේ");
  CHECK(nfc("plain ascii") == "plain ascii");
}

TEST_CASE("suffix matching is raw string comparison on token ends") {
  CHECK(token_ends_with("කරනවා", "වා"));
  CHECK(token_ends_with("කරනවා", "නවා"));
  CHECK_FALSE(token_ends_with("කරනවා", "ව"));  // final codepoint differs
  CHECK(token_ends_with("නම්", "නම්"));          // a string is its own suffix
  CHECK_FALSE(token_ends_with("a", "ab"));
  CHECK_FALSE(token_ends_with("abc", ""));
}

TEST_CASE("property: tokenizer never crashes and offsets stay sound") {
  std::mt19937 rng(41);
  for (int i = 0; i < 10000; ++i) {
    const std::string text = random_utf8(rng, 40);
    try {
      for (const Token& t : tokenize_target(text)) {
        REQUIRE(!t.text.empty());
        REQUIRE(t.offset + t.text.size() <= text.size());
        REQUIRE(text.substr(t.offset, t.text.size()) == t.text);
      }
    } catch (const EmptyText&) {
      // defined outcome for token-free input
    }
  }
}

}  // TEST_SUITE
