#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace medread {

// ASCII lowercasing; bytes outside A-Z pass through unchanged.
std::string fold_case(std::string_view s);

// A word token carries at least one alphanumeric character; pure
// punctuation tokens are not words.
bool is_word_token(std::string_view token);

// Heuristic syllable count: maximal vowel groups (aeiouy) plus one per
// contiguous digit group, minus a terminal silent "e" (unless the word
// ends in consonant+"le"); never below 1.
int count_syllables(std::string_view word);

// Alphanumeric characters only: ASCII letters/digits plus non-ASCII
// code points that are not common punctuation.
std::size_t word_chars(std::string_view word);

struct SentenceStats {
  std::size_t n_words = 0;
  std::size_t n_unique_words = 0;  // case-folded
  std::size_t n_chars = 0;
  std::size_t n_syllables = 0;
  std::size_t n_polysyllables = 0;  // words with >= 3 syllables
  std::vector<int> per_word_syllables;
};

// Throws std::invalid_argument("no words") when no token is a word.
SentenceStats sentence_stats(const std::vector<std::string>& tokens);

}  // namespace medread
