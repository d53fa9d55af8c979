#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "braidconf/sampling.hpp"
#include "braidconf/words.hpp"

using namespace braidconf;

namespace {
ReducedWord W(const char* text) { return parse_word(text); }
}

TEST_CASE("concat cancels and respects lengths") {
  CHECK(concat(W("x"), W("X")).is_identity());
  CHECK(concat(W("xy"), W("Yx")) == W("xx"));  // hand reduction: xy * y^-1 x = x^2
  // c * x has no cancellation, so lengths add
  ReducedWord c = W("xyXY");
  ReducedWord p = concat(c, W("x"));
  CHECK(p == W("xyXYx"));
  CHECK(p.length() == 5);
  CHECK_THROWS_AS(concat(W("x"), ReducedWord(3)), std::invalid_argument);
}

TEST_CASE("invert reverses with sign flip") {
  CHECK(invert(ReducedWord(2)).is_identity());
  CHECK(invert(W("xy")) == W("YX"));
  CHECK(invert(W("xyXY")) == W("yxYX"));
  Rng rng(7);
  long bad = 0;
  for (int i = 0; i < 100000; ++i) {
    ReducedWord w = random_reduced_word(rng, 2, i % 30);
    if (invert(invert(w)) != w) ++bad;
    if (invert(w).length() != w.length()) ++bad;
    if (!concat(w, invert(w)).is_identity()) ++bad;
  }
  CHECK(bad == 0);
}

TEST_CASE("substitute is homomorphic") {
  std::vector<ReducedWord> f_images = {W("xy"), W("X")};
  CHECK(substitute(W("x"), f_images) == W("xy"));
  CHECK(substitute(ReducedWord(2), f_images).is_identity());
  CHECK(substitute(W("xyXY"), f_images) == W("xyXY"));  // f fixes the commutator
  std::vector<ReducedWord> too_few = {W("x")};
  CHECK_THROWS_AS(substitute(W("x"), too_few), std::invalid_argument);

  Rng rng(11);
  std::vector<ReducedWord> identity_images = {W("x"), W("y")};
  long bad = 0;
  for (int i = 0; i < 100000; ++i) {
    ReducedWord u = random_reduced_word(rng, 2, i % 25);
    if (substitute(u, identity_images) != u) ++bad;
    if (i % 50 == 0) {
      ReducedWord v = random_reduced_word(rng, 2, (i * 7) % 25);
      if (substitute(concat(u, v), f_images) !=
          concat(substitute(u, f_images), substitute(v, f_images))) {
        ++bad;
      }
    }
  }
  CHECK(bad == 0);
}

TEST_CASE("free reduction is confluent under split points") {
  Rng rng(13);
  for (int i = 0; i < 2000; ++i) {
    // assemble a raw letter list, reduce as one block vs. via random splits
    int len = 1 + i % 40;
    std::vector<Letter> raw;
    std::uniform_int_distribution<int> pick(0, 3);
    for (int j = 0; j < len; ++j) raw.push_back(letter_of_order(pick(rng)));
    ReducedWord whole(2, std::span<const Letter>(raw));
    std::uniform_int_distribution<std::size_t> split(0, raw.size());
    std::size_t s = split(rng);
    ReducedWord left(2, std::span<const Letter>(raw.data(), s));
    ReducedWord right(2, std::span<const Letter>(raw.data() + s, raw.size() - s));
    CHECK(concat(left, right) == whole);
  }
}

TEST_CASE("enumeration counts match 4 * 3^(len-1)") {
  ReducedWordEnumerator en(2, 12);
  std::vector<unsigned long long> by_len(13, 0);
  while (en.advance()) ++by_len[en.current().size()];
  CHECK(by_len[0] == 1);
  unsigned long long expect = 4;
  for (int l = 1; l <= 12; ++l) {
    CHECK(by_len[static_cast<std::size_t>(l)] == expect);
    CHECK(by_len[static_cast<std::size_t>(l)] == reduced_word_count(2, l));
    expect *= 3;
  }
}

TEST_CASE("enumeration is length-lex, duplicate-free, and prefix-partitionable") {
  // order and uniqueness
  ReducedWordEnumerator en(2, 6);
  std::set<ReducedWord> seen;
  ReducedWord prev;
  bool have_prev = false;
  int count = 0;
  while (auto w = en.next()) {
    CHECK(seen.insert(*w).second);
    if (have_prev) CHECK(prev < *w);
    prev = *w;
    have_prev = true;
    ++count;
  }
  CHECK(count == 1457);  // identity + 1456 non-identity words

  // partition by 2-letter prefixes reproduces the full stream
  std::set<ReducedWord> partitioned;
  ReducedWordEnumerator short_words(2, 1);
  while (auto w = short_words.next()) partitioned.insert(*w);
  ReducedWordEnumerator prefixes(2, 2);
  while (auto p = prefixes.next()) {
    if (p->length() != 2) continue;
    ReducedWordEnumerator part(2, 6, *p);
    while (auto w = part.next()) partitioned.insert(*w);
  }
  CHECK(partitioned == seen);
}

TEST_CASE("text round trip") {
  CHECK(to_string(W("xyXY")) == "xyXY");
  CHECK(to_string(ReducedWord(2)) == "");
  CHECK(parse_word("") == ReducedWord(2));
  CHECK(parse_word("xX").is_identity());
  ReducedWord general = parse_word("g0G2g1", 3);
  CHECK(general.rank() == 3);
  CHECK(to_string(general) == "g0G2g1");
  Rng rng(3);
  for (int i = 0; i < 500; ++i) {
    ReducedWord w = random_reduced_word(rng, 2, i % 20);
    CHECK(parse_word(to_string(w)) == w);
  }
}

TEST_CASE("words reject bad input") {
  CHECK_THROWS_AS(ReducedWord(0), std::invalid_argument);
  CHECK_THROWS_AS(ReducedWord(1, {2}), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("xq"), std::invalid_argument);
}

TEST_CASE("enumeration corner cases") {
  // prefix longer than the cap yields nothing
  ReducedWordEnumerator clipped(2, 1, W("xy"));
  CHECK_FALSE(clipped.next().has_value());
  // zero-length cap yields only the identity
  ReducedWordEnumerator only_id(2, 0);
  auto first = only_id.next();
  REQUIRE(first.has_value());
  CHECK(first->is_identity());
  CHECK_FALSE(only_id.next().has_value());
  // rank 1 still enumerates: x, X at length 1, then xx, XX
  ReducedWordEnumerator rank1(1, 2);
  int count = 0;
  while (rank1.advance()) ++count;
  CHECK(count == 5);
}

TEST_CASE("parser rejects truncated general-rank letters") {
  CHECK_THROWS_AS(parse_word("g"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("xG"), std::invalid_argument);
}
