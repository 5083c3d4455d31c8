#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "medread/analyzers.hpp"

using namespace medread;

TEST_CASE("count_syllables on hand-derived cases") {
  // Single vowel group.
  CHECK(count_syllables("a") == 1);
  // Vowel groups a|e; consonant+"le" keeps the final syllable.
  CHECK(count_syllables("table") == 2);
  // ea|a|i|i|y.
  CHECK(count_syllables("readability") == 5);
  // Terminal silent e drops.
  CHECK(count_syllables("made") == 1);
  // "ee" is one group; count may not drop below 1.
  CHECK(count_syllables("see") == 1);
  CHECK(count_syllables("the") == 1);
  // Vowel+"le" is not the consonant+"le" case.
  CHECK(count_syllables("mile") == 1);
  CHECK(count_syllables("apple") == 2);
  // Digit groups count one syllable each.
  CHECK(count_syllables("95") == 1);
  CHECK(count_syllables("b12") == 1);
  // Letterless tokens come back as 1.
  CHECK(count_syllables("...") == 1);
  // No vowels, still at least 1.
  CHECK(count_syllables("tsk") == 1);
  // Trailing punctuation does not block the silent-e rule.
  CHECK(count_syllables("made,") == count_syllables("made"));
}

TEST_CASE("count_syllables is case-invariant and total") {
  std::mt19937 eng(7);
  const std::string alphabet = "abcdefghijklmnopqrstuvwxyz-0123456789";
  for (int i = 0; i < 500; ++i) {
    std::size_t len = 1 + eng() % 12;
    std::string word;
    for (std::size_t k = 0; k < len; ++k) {
      word.push_back(alphabet[eng() % alphabet.size()]);
    }
    std::string upper = word;
    std::transform(upper.begin(), upper.end(), upper.begin(), [](char c) {
      return c >= 'a' && c <= 'z' ? static_cast<char>(c - 'a' + 'A') : c;
    });
    int n = count_syllables(word);
    CHECK(n >= 1);
    CHECK(count_syllables(upper) == n);
  }
}

TEST_CASE("word_chars counts alphanumerics only") {
  CHECK(word_chars("Go") == 2);
  CHECK(word_chars("anti-tumour") == 10);
  CHECK(word_chars("95%") == 2);
  CHECK(word_chars("...") == 0);
  CHECK(word_chars("(CI") == 2);
  // Greek letters count; the multiplication sign does not.
  CHECK(word_chars("\xce\xb1-TNF") == 4);
  CHECK(word_chars("2\xc3\x97") == 1);
}

TEST_CASE("sentence_stats hand counts") {
  SentenceStats s = sentence_stats({"Go", "."});
  CHECK(s.n_words == 1);
  CHECK(s.n_chars == 2);
  CHECK(s.n_syllables == 1);
  CHECK(s.n_polysyllables == 0);

  s = sentence_stats({"The", "cat", "sat"});
  CHECK(s.n_words == 3);
  CHECK(s.n_unique_words == 3);
  CHECK(s.n_syllables == 3);

  s = sentence_stats({"the", "the"});
  CHECK(s.n_words == 2);
  CHECK(s.n_unique_words == 1);

  CHECK_THROWS_AS(sentence_stats({".", ","}), std::invalid_argument);
}

TEST_CASE("sentence_stats is permutation-invariant up to word order") {
  std::mt19937 eng(11);
  std::vector<std::string> vocab = {"the",      "patient",  "responded",
                                    "well",     "to",       "antibiotics",
                                    "95%",      ",",        "cardiomyopathy",
                                    "a"};
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::string> tokens;
    std::size_t len = 2 + eng() % 8;
    for (std::size_t i = 0; i < len; ++i) {
      tokens.push_back(vocab[eng() % vocab.size()]);
    }
    tokens.push_back("word");  // guarantee at least one word token
    std::vector<std::string> shuffled = tokens;
    std::shuffle(shuffled.begin(), shuffled.end(), eng);
    SentenceStats a = sentence_stats(tokens);
    SentenceStats b = sentence_stats(shuffled);
    CHECK(a.n_words == b.n_words);
    CHECK(a.n_unique_words == b.n_unique_words);
    CHECK(a.n_chars == b.n_chars);
    CHECK(a.n_syllables == b.n_syllables);
    CHECK(a.n_polysyllables == b.n_polysyllables);
    // Every word has at least one syllable; polysyllables carry >= 3.
    CHECK(a.n_syllables >= a.n_words);
    CHECK(a.n_polysyllables * 3 <= a.n_syllables);
  }
}
