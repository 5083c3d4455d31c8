#include "medread/jargon.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "medread/analyzers.hpp"
#include "medread/error.hpp"
#include "medread/io.hpp"

namespace medread {

namespace {

// Tie-break order for build_lexicon.
int category_priority(SpanCategory c) {
  switch (c) {
    case SpanCategory::GoogleHard:
      return 0;
    case SpanCategory::GoogleEasy:
      return 1;
    case SpanCategory::MedicalNameEntity:
      return 2;
    case SpanCategory::MedicalAbbreviation:
      return 3;
    case SpanCategory::GeneralAbbreviation:
      return 4;
    case SpanCategory::GeneralComplex:
      return 5;
    default:
      return 6;
  }
}

std::string surface_key(const std::vector<std::string>& tokens,
                        std::size_t start, std::size_t end) {
  std::string key;
  for (std::size_t i = start; i < end; ++i) {
    if (i > start) {
      key += ' ';
    }
    key += fold_case(tokens[i]);
  }
  return key;
}

std::size_t token_count_of_key(const std::string& key) {
  return static_cast<std::size_t>(std::count(key.begin(), key.end(), ' ')) + 1;
}

bool is_abbreviation_shaped(const std::string& token) {
  if (token.size() < 2 || token.size() > 6) {
    return false;
  }
  for (char c : token) {
    if (c < 'A' || c > 'Z') {
      return false;
    }
  }
  return true;
}

void check_spans(const std::vector<ComplexSpan>& spans, std::size_t n_tokens,
                 const char* what) {
  std::size_t prev_end = 0;
  for (const ComplexSpan& s : spans) {
    if (s.start >= s.end || s.end > n_tokens) {
      throw std::invalid_argument(std::string(what) + ": span out of bounds");
    }
    if (s.start < prev_end) {
      throw std::invalid_argument(std::string(what) +
                                  ": spans overlap or are unsorted");
    }
    prev_end = s.end;
  }
}

}  // namespace

std::string_view to_string(Granularity g) {
  switch (g) {
    case Granularity::Binary:
      return "binary";
    case Granularity::ThreeClass:
      return "3";
    default:
      return "7";
  }
}

Granularity granularity_from_string(std::string_view s) {
  if (s == "binary" || s == "1" || s == "2") return Granularity::Binary;
  if (s == "3" || s == "three-class") return Granularity::ThreeClass;
  if (s == "7" || s == "seven-category") return Granularity::SevenCategory;
  throw ParseError("unknown granularity: '" + std::string(s) + "'");
}

std::string_view collapse(SpanCategory category, Granularity g) {
  switch (g) {
    case Granularity::Binary:
      return "complex";
    case Granularity::SevenCategory:
      return to_string(category);
    case Granularity::ThreeClass:
      switch (category) {
        case SpanCategory::GoogleEasy:
        case SpanCategory::GoogleHard:
        case SpanCategory::MedicalNameEntity:
          return "medical";
        case SpanCategory::GeneralComplex:
        case SpanCategory::MultiSense:
          return "general+multisense";
        default:
          return "abbreviation";
      }
  }
  return "complex";
}

const std::vector<std::string>& granularity_labels(Granularity g) {
  static const std::vector<std::string> binary = {"complex"};
  static const std::vector<std::string> three = {"medical",
                                                 "general+multisense",
                                                 "abbreviation"};
  static const std::vector<std::string> seven = [] {
    std::vector<std::string> out;
    for (SpanCategory c : kAllSpanCategories) {
      out.emplace_back(to_string(c));
    }
    return out;
  }();
  switch (g) {
    case Granularity::Binary:
      return binary;
    case Granularity::ThreeClass:
      return three;
    default:
      return seven;
  }
}

Lexicon build_lexicon(const Corpus& train, std::size_t min_count) {
  if (train.empty()) {
    throw std::invalid_argument("empty training corpus");
  }
  std::unordered_map<std::string, std::array<std::size_t, 7>> counts;
  for (const AnnotatedSentence& s : train) {
    for (const ComplexSpan& span : s.spans) {
      if (span.end > s.tokens.size() || span.start >= span.end) {
        throw ValidationError("invalid span in sentence '" + s.id + "'");
      }
      std::string key = surface_key(s.tokens, span.start, span.end);
      counts[key][static_cast<int>(span.category)] += 1;
    }
  }
  Lexicon lexicon;
  for (const auto& [key, by_category] : counts) {
    std::size_t total = 0;
    for (std::size_t c : by_category) {
      total += c;
    }
    if (total < min_count) {
      continue;
    }
    int best = -1;
    for (int c = 0; c < kNumSpanCategories; ++c) {
      if (by_category[c] == 0) {
        continue;
      }
      if (best < 0 || by_category[c] > by_category[best] ||
          (by_category[c] == by_category[best] &&
           category_priority(static_cast<SpanCategory>(c)) <
               category_priority(static_cast<SpanCategory>(best)))) {
        best = c;
      }
    }
    lexicon.entries[key] = static_cast<SpanCategory>(best);
    lexicon.max_entry_len =
        std::max(lexicon.max_entry_len, token_count_of_key(key));
  }
  return lexicon;
}

Lexicon load_lexicon_tsv(const std::filesystem::path& path) {
  Lexicon lexicon;
  for (const auto& [surface, category] : read_tsv_pairs(path)) {
    if (surface.empty()) {
      throw ParseError(path.string() + ": empty lexicon surface");
    }
    std::string key = fold_case(surface);
    lexicon.entries[key] = span_category_from_string(category);
    lexicon.max_entry_len =
        std::max(lexicon.max_entry_len, token_count_of_key(key));
  }
  return lexicon;
}

void save_lexicon_tsv(const Lexicon& lexicon,
                      const std::filesystem::path& path) {
  std::vector<std::pair<std::string, SpanCategory>> rows(
      lexicon.entries.begin(), lexicon.entries.end());
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::string out;
  for (const auto& [surface, category] : rows) {
    out += surface;
    out += '\t';
    out += to_string(category);
    out += '\n';
  }
  write_file_atomic(path, out);
}

std::unordered_set<std::string> load_word_list(
    const std::filesystem::path& path) {
  std::unordered_set<std::string> words;
  for (const std::string& line : read_lines(path)) {
    if (!line.empty()) {
      words.insert(fold_case(line));
    }
  }
  return words;
}

std::vector<ComplexSpan> tag(
    const std::vector<std::string>& tokens, const Lexicon& lexicon,
    const std::unordered_set<std::string>& common_words) {
  std::vector<std::string> folded;
  folded.reserve(tokens.size());
  for (const std::string& t : tokens) {
    folded.push_back(fold_case(t));
  }

  std::vector<ComplexSpan> spans;
  std::vector<bool> covered(tokens.size(), false);
  std::size_t i = 0;
  while (i < tokens.size()) {
    std::size_t matched = 0;
    SpanCategory matched_cat = SpanCategory::GoogleEasy;
    std::size_t limit = std::min(lexicon.max_entry_len, tokens.size() - i);
    std::string key;
    std::vector<std::size_t> key_len_at;  // key length after each token
    key_len_at.reserve(limit);
    for (std::size_t len = 1; len <= limit; ++len) {
      if (len > 1) {
        key += ' ';
      }
      key += folded[i + len - 1];
      key_len_at.push_back(key.size());
    }
    for (std::size_t len = limit; len >= 1; --len) {
      auto it = lexicon.entries.find(key.substr(0, key_len_at[len - 1]));
      if (it != lexicon.entries.end()) {
        matched = len;
        matched_cat = it->second;
        break;
      }
    }
    if (matched > 0) {
      spans.push_back({i, i + matched, matched_cat});
      for (std::size_t k = i; k < i + matched; ++k) {
        covered[k] = true;
      }
      i += matched;
    } else {
      ++i;
    }
  }

  for (std::size_t t = 0; t < tokens.size(); ++t) {
    if (covered[t] || !is_abbreviation_shaped(tokens[t])) {
      continue;
    }
    if (common_words.count(folded[t])) {
      continue;
    }
    spans.push_back({t, t + 1, SpanCategory::MedicalAbbreviation});
  }
  std::sort(spans.begin(), spans.end(), [](const auto& a, const auto& b) {
    return a.start < b.start;
  });
  return spans;
}

JargonCountReport count_jargon(const std::vector<ComplexSpan>& spans,
                               const std::vector<std::string>& tokens,
                               Granularity g) {
  check_spans(spans, tokens.size(), "count_jargon");
  std::size_t word_count = 0;
  for (const std::string& t : tokens) {
    if (is_word_token(t)) {
      ++word_count;
    }
  }
  JargonCountReport report;
  for (const std::string& label : granularity_labels(g)) {
    report.by_label[label] = JargonCounts{};
  }
  for (const ComplexSpan& span : spans) {
    JargonCounts& counts = report.by_label[std::string(collapse(span.category, g))];
    counts.n_spans += 1;
    counts.n_tokens += span.end - span.start;
    report.aggregate.n_spans += 1;
    report.aggregate.n_tokens += span.end - span.start;
  }
  double denom = word_count > 0 ? static_cast<double>(word_count) : 1.0;
  for (auto& [label, counts] : report.by_label) {
    counts.pct_tokens = static_cast<double>(counts.n_tokens) / denom;
  }
  report.aggregate.pct_tokens =
      static_cast<double>(report.aggregate.n_tokens) / denom;
  return report;
}

ExternalPredictions load_external_predictions(
    const std::filesystem::path& path, const Corpus& corpus) {
  std::unordered_map<std::string, const AnnotatedSentence*> by_id;
  for (const AnnotatedSentence& s : corpus) {
    by_id[s.id] = &s;
  }
  ExternalPredictions out;
  std::vector<std::string> lines = read_lines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty()) {
      continue;
    }
    const std::string where = path.string() + ":" + std::to_string(i + 1);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(lines[i]);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(where + ": malformed JSON: " + e.what());
    }
    std::string id;
    try {
      id = j.at("id").get<std::string>();
    } catch (const nlohmann::json::exception&) {
      throw ParseError(where + ": missing 'id'");
    }
    auto it = by_id.find(id);
    if (it == by_id.end()) {
      throw ValidationError(where + ": unknown sentence id '" + id + "'");
    }
    const AnnotatedSentence& sentence = *it->second;
    std::vector<ComplexSpan> spans;
    if (j.contains("labels")) {
      std::vector<std::string> labels;
      try {
        labels = j["labels"].get<std::vector<std::string>>();
      } catch (const nlohmann::json::exception& e) {
        throw ParseError(where + ": bad 'labels': " + e.what());
      }
      if (labels.size() != sentence.tokens.size()) {
        throw ValidationError(where + ": sentence '" + id + "' has " +
                              std::to_string(sentence.tokens.size()) +
                              " tokens but " + std::to_string(labels.size()) +
                              " labels");
      }
      BioDecode decoded = from_bio(sentence.tokens, labels);
      spans = std::move(decoded.spans);
      for (const std::string& repair : decoded.repairs) {
        out.repairs.push_back(id + ": " + repair);
      }
    } else if (j.contains("spans")) {
      try {
        for (const auto& js : j["spans"]) {
          ComplexSpan span;
          span.start = js.at("start").get<std::size_t>();
          span.end = js.at("end").get<std::size_t>();
          span.category =
              span_category_from_string(js.at("category").get<std::string>());
          spans.push_back(span);
        }
      } catch (const nlohmann::json::exception& e) {
        throw ParseError(where + ": bad 'spans': " + e.what());
      }
      std::sort(spans.begin(), spans.end(), [](const auto& a, const auto& b) {
        return a.start < b.start;
      });
      try {
        check_spans(spans, sentence.tokens.size(), "prediction");
      } catch (const std::invalid_argument& e) {
        throw ValidationError(where + ": sentence '" + id + "': " + e.what());
      }
    } else {
      throw ParseError(where + ": record needs 'labels' or 'spans'");
    }
    out.spans[id] = std::move(spans);
  }
  return out;
}

}  // namespace medread
