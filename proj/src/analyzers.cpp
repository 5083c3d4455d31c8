#include "medread/analyzers.hpp"

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>

namespace medread {

namespace {

bool is_ascii_letter(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }

bool is_vowel(char c) {
  switch (c) {
    case 'a':
    case 'e':
    case 'i':
    case 'o':
    case 'u':
    case 'y':
      return true;
    default:
      return false;
  }
}

// Decodes one UTF-8 code point starting at i; advances i past it.
// Malformed bytes are consumed one at a time and returned as-is.
std::uint32_t next_code_point(std::string_view s, std::size_t& i) {
  unsigned char b0 = static_cast<unsigned char>(s[i]);
  std::size_t len = 1;
  std::uint32_t cp = b0;
  if (b0 >= 0xF0) {
    len = 4;
    cp = b0 & 0x07u;
  } else if (b0 >= 0xE0) {
    len = 3;
    cp = b0 & 0x0Fu;
  } else if (b0 >= 0xC0) {
    len = 2;
    cp = b0 & 0x1Fu;
  }
  if (len == 1 || i + len > s.size()) {
    ++i;
    return b0;
  }
  for (std::size_t k = 1; k < len; ++k) {
    unsigned char b = static_cast<unsigned char>(s[i + k]);
    if ((b & 0xC0u) != 0x80u) {
      ++i;
      return b0;
    }
    cp = (cp << 6) | (b & 0x3Fu);
  }
  i += len;
  return cp;
}

// Code points treated as punctuation rather than letters: Latin-1
// punctuation/symbols and the general punctuation block (dashes, curly
// quotes, ellipsis), which show up routinely in scraped medical text.
bool is_non_ascii_punct(std::uint32_t cp) {
  if (cp >= 0xA0 && cp <= 0xBF) return true;
  if (cp == 0xD7 || cp == 0xF7) return true;
  if (cp >= 0x2000 && cp <= 0x206F) return true;
  return false;
}

}  // namespace

std::string fold_case(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') {
      c = static_cast<char>(c - 'A' + 'a');
    }
  }
  return out;
}

bool is_word_token(std::string_view token) {
  std::size_t i = 0;
  while (i < token.size()) {
    char c = token[i];
    if (is_ascii_letter(c) || is_ascii_digit(c)) {
      return true;
    }
    if (static_cast<unsigned char>(c) < 0x80) {
      ++i;
      continue;
    }
    std::uint32_t cp = next_code_point(token, i);
    if (!is_non_ascii_punct(cp)) {
      return true;
    }
  }
  return false;
}

int count_syllables(std::string_view word) {
  std::string w = fold_case(word);
  int groups = 0;
  bool in_vowel = false;
  bool in_digit = false;
  for (char c : w) {
    if (is_ascii_letter(c) && is_vowel(c)) {
      if (!in_vowel) {
        ++groups;
      }
      in_vowel = true;
      in_digit = false;
    } else if (is_ascii_digit(c)) {
      if (!in_digit) {
        ++groups;
      }
      in_digit = true;
      in_vowel = false;
    } else {
      in_vowel = false;
      in_digit = false;
    }
  }

  // Terminal silent "e", ignoring trailing punctuation. consonant+"le"
  // keeps its syllable ("table").
  std::size_t end = w.size();
  while (end > 0 && !is_ascii_letter(w[end - 1])) {
    --end;
  }
  if (end >= 2 && w[end - 1] == 'e' && groups >= 2) {
    bool le_keeps_syllable =
        end >= 3 && w[end - 2] == 'l' && is_ascii_letter(w[end - 3]) &&
        !is_vowel(w[end - 3]);
    if (!le_keeps_syllable) {
      --groups;
    }
  }
  return groups >= 1 ? groups : 1;
}

std::size_t word_chars(std::string_view word) {
  std::size_t count = 0;
  std::size_t i = 0;
  while (i < word.size()) {
    char c = word[i];
    if (static_cast<unsigned char>(c) < 0x80) {
      if (is_ascii_letter(c) || is_ascii_digit(c)) {
        ++count;
      }
      ++i;
      continue;
    }
    std::uint32_t cp = next_code_point(word, i);
    if (!is_non_ascii_punct(cp)) {
      ++count;
    }
  }
  return count;
}

SentenceStats sentence_stats(const std::vector<std::string>& tokens) {
  SentenceStats stats;
  std::unordered_set<std::string> seen;
  for (const std::string& token : tokens) {
    if (!is_word_token(token)) {
      continue;
    }
    int syll = count_syllables(token);
    stats.n_words += 1;
    stats.n_chars += word_chars(token);
    stats.n_syllables += static_cast<std::size_t>(syll);
    if (syll >= 3) {
      stats.n_polysyllables += 1;
    }
    stats.per_word_syllables.push_back(syll);
    seen.insert(fold_case(token));
  }
  if (stats.n_words == 0) {
    throw std::invalid_argument("no words");
  }
  stats.n_unique_words = seen.size();
  return stats;
}

}  // namespace medread
