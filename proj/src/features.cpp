#include "medread/features.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "medread/analyzers.hpp"
#include "medread/error.hpp"
#include "medread/io.hpp"
#include "medread/jargon.hpp"

namespace medread {

namespace {

std::unordered_map<std::string, double> load_value_table(
    const std::filesystem::path& path, const char* what) {
  std::unordered_map<std::string, double> table;
  for (const auto& [word, value] : read_tsv_pairs(path)) {
    table[fold_case(word)] = parse_double(value, what);
  }
  return table;
}

std::string label_suffix(const std::string& label) {
  std::string out = label;
  std::replace(out.begin(), out.end(), '+', '_');
  return out;
}

}  // namespace

ResourceTables load_resources(const std::filesystem::path& dir) {
  ResourceTables tables;
  tables.aoa = load_value_table(dir / "aoa.tsv", "AoA value");
  tables.zipf = load_value_table(dir / "zipf.tsv", "Zipf value");
  tables.common2000 = load_word_list(dir / "common2000.txt");
  tables.loaded = true;
  return tables;
}

const std::vector<std::string>& feature_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out = {
        "t_word",          "t_uword",
        "t_char",          "t_syll",
        "t_syll2",         "t_syll3",
        "avg_chars_per_token", "corr_ttr",
        "aoa_max",         "aoa_total",
        "aoa_avg",         "zipf_total",
        "n_soph_word_tokens", "n_soph_word_types",
        "jargon_spans",    "jargon_tokens",
        "jargon_token_pct",
    };
    for (const std::string& label :
         granularity_labels(Granularity::ThreeClass)) {
      std::string suffix = label_suffix(label);
      out.push_back("jargon_spans_" + suffix);
      out.push_back("jargon_tokens_" + suffix);
      out.push_back("jargon_token_pct_" + suffix);
    }
    return out;
  }();
  return ids;
}

FeatureVector extract_features(const AnnotatedSentence& sentence,
                               const ResourceTables& resources,
                               const std::vector<ComplexSpan>& spans) {
  if (!resources.loaded) {
    throw std::invalid_argument("resource tables not loaded");
  }
  SentenceStats stats = sentence_stats(sentence.tokens);

  FeatureVector fv;
  double n_word = static_cast<double>(stats.n_words);
  fv["t_word"] = n_word;
  fv["t_uword"] = static_cast<double>(stats.n_unique_words);
  fv["t_char"] = static_cast<double>(stats.n_chars);
  fv["t_syll"] = static_cast<double>(stats.n_syllables);
  std::size_t syll3plus = 0;  // words with more than 2 syllables
  std::size_t syll4plus = 0;  // words with more than 3 syllables
  for (int s : stats.per_word_syllables) {
    if (s > 2) ++syll3plus;
    if (s > 3) ++syll4plus;
  }
  fv["t_syll2"] = static_cast<double>(syll3plus);
  fv["t_syll3"] = static_cast<double>(syll4plus);
  fv["avg_chars_per_token"] = static_cast<double>(stats.n_chars) / n_word;
  fv["corr_ttr"] =
      static_cast<double>(stats.n_unique_words) / std::sqrt(2.0 * n_word);

  double aoa_max = 0.0, aoa_total = 0.0, zipf_total = 0.0;
  std::size_t aoa_covered = 0;
  std::size_t soph_tokens = 0;
  std::unordered_set<std::string> soph_types;
  for (const std::string& token : sentence.tokens) {
    if (!is_word_token(token)) {
      continue;
    }
    std::string folded = fold_case(token);
    auto aoa_it = resources.aoa.find(folded);
    if (aoa_it != resources.aoa.end()) {
      aoa_max = std::max(aoa_max, aoa_it->second);
      aoa_total += aoa_it->second;
      ++aoa_covered;
    }
    auto zipf_it = resources.zipf.find(folded);
    if (zipf_it != resources.zipf.end()) {
      zipf_total += zipf_it->second;
    }
    if (!resources.common2000.count(folded)) {
      ++soph_tokens;
      soph_types.insert(folded);
    }
  }
  fv["aoa_max"] = aoa_max;
  fv["aoa_total"] = aoa_total;
  fv["aoa_avg"] =
      aoa_covered > 0 ? aoa_total / static_cast<double>(aoa_covered) : 0.0;
  fv["zipf_total"] = zipf_total;
  fv["n_soph_word_tokens"] = static_cast<double>(soph_tokens);
  fv["n_soph_word_types"] = static_cast<double>(soph_types.size());

  JargonCountReport jargon =
      count_jargon(spans, sentence.tokens, Granularity::ThreeClass);
  fv["jargon_spans"] = static_cast<double>(jargon.aggregate.n_spans);
  fv["jargon_tokens"] = static_cast<double>(jargon.aggregate.n_tokens);
  fv["jargon_token_pct"] = jargon.aggregate.pct_tokens;
  for (const auto& [label, counts] : jargon.by_label) {
    std::string suffix = label_suffix(label);
    fv["jargon_spans_" + suffix] = static_cast<double>(counts.n_spans);
    fv["jargon_tokens_" + suffix] = static_cast<double>(counts.n_tokens);
    fv["jargon_token_pct_" + suffix] = counts.pct_tokens;
  }
  return fv;
}

}  // namespace medread
