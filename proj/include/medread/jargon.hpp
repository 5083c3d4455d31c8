#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "medread/corpus.hpp"

namespace medread {

enum class Granularity { Binary, ThreeClass, SevenCategory };

std::string_view to_string(Granularity g);
Granularity granularity_from_string(std::string_view s);

// Collapsed label for a category: seven-category keeps the category name,
// three-class maps to medical / general+multisense / abbreviation, binary
// maps everything to "complex".
std::string_view collapse(SpanCategory category, Granularity g);

// All labels of a granularity, in fixed order.
const std::vector<std::string>& granularity_labels(Granularity g);

struct Lexicon {
  // Key: case-folded tokens joined with single spaces.
  std::unordered_map<std::string, SpanCategory> entries;
  std::size_t max_entry_len = 0;  // tokens in the longest surface
};

// Majority category per gold-span surface; ties broken by a fixed
// category order (google-hard first).
Lexicon build_lexicon(const Corpus& train, std::size_t min_count = 1);

Lexicon load_lexicon_tsv(const std::filesystem::path& path);
void save_lexicon_tsv(const Lexicon& lexicon,
                      const std::filesystem::path& path);

// One case-folded word per line.
std::unordered_set<std::string> load_word_list(
    const std::filesystem::path& path);

// Greedy left-to-right longest match against the lexicon, then a
// 2-6-uppercase-letter abbreviation pass over unmatched tokens.
std::vector<ComplexSpan> tag(const std::vector<std::string>& tokens,
                             const Lexicon& lexicon,
                             const std::unordered_set<std::string>& common_words);

struct JargonCounts {
  std::size_t n_spans = 0;
  std::size_t n_tokens = 0;
  double pct_tokens = 0.0;  // span tokens over sentence word tokens
};

struct JargonCountReport {
  std::map<std::string, JargonCounts> by_label;  // every label, zeros kept
  JargonCounts aggregate;
};

JargonCountReport count_jargon(const std::vector<ComplexSpan>& spans,
                               const std::vector<std::string>& tokens,
                               Granularity g);

struct ExternalPredictions {
  std::map<std::string, std::vector<ComplexSpan>> spans;
  std::vector<std::string> repairs;
};

// JSONL records {"id", "labels": [...]} (BIO) or {"id", "spans": [...]}.
// Ids must exist in the corpus; BIO label lists must match token counts.
ExternalPredictions load_external_predictions(
    const std::filesystem::path& path, const Corpus& corpus);

}  // namespace medread
