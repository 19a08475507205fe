#include <random>

#include "doctest.h"
#include "planrank/word.hpp"

using namespace planrank;

TEST_CASE("words parse and print in both forms") {
  auto w = Word::parse("ab^2a");
  CHECK(w.letters() == word_type{0, 1, 1, 0});
  CHECK(w.to_string() == "abba");
  CHECK(w.to_pretty_string() == "ab^2a");
  CHECK(Word::parse("(ab)^3").to_string() == "ababab");
  CHECK(Word::parse("a^{10}").size() == 10);
  CHECK(Word::parse("a(ba^2)^2").to_string() == "abaabaa");
  CHECK_THROWS(Word::parse(""));
  CHECK_THROWS(Word::parse("a^"));
  CHECK_THROWS(Word::parse("(ab"));
}

TEST_CASE("pretty form round-trips") {
  std::mt19937 rng(0);
  for (int k = 0; k < 500; ++k) {
    word_type w(1 + rng() % 12);
    for (auto& x : w) {
      x = static_cast<letter_type>(rng() % 3);
    }
    Word const u(w);
    CHECK(Word::parse(u.to_pretty_string()) == u);
    CHECK(Word::parse(u.to_string()) == u);
  }
}

TEST_CASE("shortlex order") {
  CHECK(shortlex_less({1}, {0, 0}));
  CHECK(shortlex_less({0, 1}, {1, 0}));
  CHECK_FALSE(shortlex_less({0, 1}, {0, 1}));
  CHECK(Word::parse("b") < Word::parse("aa"));
}

TEST_CASE("patterns, identities and substitution") {
  auto p = parse_pattern("x^{n+1}y", 2);
  CHECK(p.symbols() == std::vector<letter_type>{0, 0, 0, 1});
  CHECK(p.to_string() == "x^3y");
  CHECK_THROWS(parse_pattern("x^n"));
  CHECK(parse_pattern("(xy)^2").symbols() == std::vector<letter_type>{0, 1, 0, 1});

  Identity id(parse_pattern("xy"), parse_pattern("yx"));
  CHECK(id.number_of_variables() == 2);
  CHECK_THROWS(Identity(parse_pattern("xy"), parse_pattern("x")));

  Substitution s{{0, Word::parse("ab")}, {1, Word::parse("c")}};
  CHECK(substitute(parse_pattern("xyx"), s).to_string() == "abcab");
  CHECK_THROWS(substitute(parse_pattern("xz"), s));
}

TEST_CASE("occurrences include overlaps") {
  CHECK(occurrences(Word::parse("aaaa"), Word::parse("aa")) == std::vector<std::size_t>{0, 1, 2});
  CHECK(occurrences(Word::parse("abab"), Word::parse("ba")) == std::vector<std::size_t>{1});
  CHECK(occurrences(Word::parse("ab"), Word::parse("abc")).empty());
}
