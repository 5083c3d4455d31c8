#include "medread/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "medread/analyzers.hpp"
#include "medread/error.hpp"
#include "medread/io.hpp"
#include "medread/jargon.hpp"
#include "medread/stats.hpp"

namespace medread {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* kCategoryNames[kNumSpanCategories] = {
    "google-easy",          "google-hard",
    "medical-name-entity",  "general-complex",
    "multi-sense",          "medical-abbreviation",
    "general-abbreviation",
};

}  // namespace

const SpanCategory kAllSpanCategories[kNumSpanCategories] = {
    SpanCategory::GoogleEasy,          SpanCategory::GoogleHard,
    SpanCategory::MedicalNameEntity,   SpanCategory::GeneralComplex,
    SpanCategory::MultiSense,          SpanCategory::MedicalAbbreviation,
    SpanCategory::GeneralAbbreviation,
};

std::string_view to_string(SpanCategory category) {
  return kCategoryNames[static_cast<int>(category)];
}

SpanCategory span_category_from_string(std::string_view s) {
  for (int i = 0; i < kNumSpanCategories; ++i) {
    if (s == kCategoryNames[i]) {
      return static_cast<SpanCategory>(i);
    }
  }
  throw ParseError("unknown span category: '" + std::string(s) + "'");
}

std::string_view to_string(Side side) {
  return side == Side::Complex ? "complex" : "simple";
}

std::string_view to_string(Split split) {
  switch (split) {
    case Split::Train:
      return "train";
    case Split::Dev:
      return "dev";
    default:
      return "test";
  }
}

Side side_from_string(std::string_view s) {
  if (s == "complex") return Side::Complex;
  if (s == "simple") return Side::Simple;
  throw ParseError("unknown side: '" + std::string(s) + "'");
}

Split split_from_string(std::string_view s) {
  if (s == "train") return Split::Train;
  if (s == "dev") return Split::Dev;
  if (s == "test") return Split::Test;
  throw ParseError("unknown split: '" + std::string(s) + "'");
}

const std::vector<std::string>& canonical_sources() {
  static const std::vector<std::string> sources = {
      "cochrane",
      "pnas",
      "elife",
      "wiki",
      "msd",
      "nihr-public-health-research",
      "nihr-health-technology-assessment",
      "nihr-efficacy-and-mechanism-evaluation",
      "nihr-programme-grants-for-applied-research",
      "nihr-health-services-and-delivery-research",
      "plos-biology",
      "plos-genetics",
      "plos-pathogens",
      "plos-computational-biology",
      "plos-neglected-tropical-diseases",
      "other",
  };
  return sources;
}

bool is_canonical_source(std::string_view source) {
  const auto& sources = canonical_sources();
  return std::find(sources.begin(), sources.end(), source) != sources.end();
}

std::string source_group(std::string_view source) {
  if (source.rfind("nihr-", 0) == 0) return "NIHR Series";
  if (source.rfind("plos-", 0) == 0) return "PLOS Series";
  if (source == "cochrane") return "Cochrane";
  if (source == "pnas") return "PNAS";
  if (source == "elife") return "eLife";
  if (source == "wiki") return "Wiki";
  if (source == "msd") return "MSD";
  if (source == "other") return "Other";
  return std::string(source);
}

std::vector<Violation> validate_sentence(const AnnotatedSentence& s) {
  std::vector<Violation> out;
  auto add = [&](std::string rule, std::string message) {
    out.push_back({s.id, std::move(rule), std::move(message)});
  };

  if (s.id.empty()) {
    add("empty-id", "sentence id must be non-empty");
  }
  if (!is_canonical_source(s.source)) {
    add("unknown-source", "source '" + s.source + "' is not a canonical id");
  }
  if (s.tokens.empty()) {
    add("empty-tokens", "tokens must be non-empty");
  }
  for (std::size_t i = 0; i < s.tokens.size(); ++i) {
    const std::string& tok = s.tokens[i];
    if (tok.empty()) {
      add("empty-token", "token " + std::to_string(i) + " is empty");
    } else if (tok.find_first_of(" \t\r\n") != std::string::npos) {
      add("token-whitespace",
          "token " + std::to_string(i) + " contains whitespace");
    }
  }
  if (s.rating && (*s.rating < kMinRating || *s.rating > kMaxRating ||
                   !std::isfinite(*s.rating))) {
    std::ostringstream msg;
    msg << "rating " << *s.rating << " outside [" << kMinRating << ", "
        << kMaxRating << "]";
    add("rating-range", msg.str());
  }
  for (std::size_t i = 0; i < s.spans.size(); ++i) {
    const ComplexSpan& span = s.spans[i];
    if (span.start >= span.end) {
      add("span-bounds", "span " + std::to_string(i) + ": start < end violated");
    } else if (span.end > s.tokens.size()) {
      add("span-bounds",
          "span " + std::to_string(i) + " ends past the last token");
    }
    if (i > 0) {
      const ComplexSpan& prev = s.spans[i - 1];
      if (span.start < prev.start) {
        add("span-order", "spans not sorted by start");
      } else if (prev.end > span.start) {
        add("span-overlap", "spans " + std::to_string(i - 1) + " and " +
                                std::to_string(i) + " overlap");
      }
    }
  }
  return out;
}

std::vector<Violation> validate(const Corpus& corpus) {
  std::vector<Violation> out;
  std::unordered_set<std::string> ids;
  for (const AnnotatedSentence& s : corpus) {
    std::vector<Violation> local = validate_sentence(s);
    out.insert(out.end(), local.begin(), local.end());
    if (!ids.insert(s.id).second) {
      out.push_back({s.id, "duplicate-id", "id occurs more than once"});
    }
  }
  return out;
}

namespace {

const std::unordered_set<std::string>& allowed_fields() {
  static const std::unordered_set<std::string> fields = {
      "id", "source", "side", "split", "tokens", "rating", "spans"};
  return fields;
}

}  // namespace

AnnotatedSentence parse_sentence_json(const std::string& line, bool strict) {
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw ParseError("record is not a JSON object");
  }
  for (const auto& item : j.items()) {
    if (!allowed_fields().count(item.key())) {
      if (strict) {
        throw ParseError("unknown field '" + item.key() + "'");
      }
    }
  }
  AnnotatedSentence s;
  try {
    s.id = j.at("id").get<std::string>();
    s.source = j.at("source").get<std::string>();
    s.side = side_from_string(j.at("side").get<std::string>());
    s.split = split_from_string(j.at("split").get<std::string>());
    s.tokens = j.at("tokens").get<std::vector<std::string>>();
    if (strict && !j.contains("rating")) {
      throw ParseError("missing field 'rating'");
    }
    if (j.contains("rating") && !j["rating"].is_null()) {
      s.rating = j["rating"].get<double>();
    }
    if (strict && !j.contains("spans")) {
      throw ParseError("missing field 'spans'");
    }
    if (j.contains("spans") && !j["spans"].is_null()) {
      for (const auto& js : j["spans"]) {
        ComplexSpan span;
        span.start = js.at("start").get<std::size_t>();
        span.end = js.at("end").get<std::size_t>();
        span.category =
            span_category_from_string(js.at("category").get<std::string>());
        s.spans.push_back(span);
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad record: ") + e.what());
  }
  return s;
}

std::string sentence_to_json(const AnnotatedSentence& s) {
  ordered_json j;
  j["id"] = s.id;
  j["source"] = s.source;
  j["side"] = std::string(to_string(s.side));
  j["split"] = std::string(to_string(s.split));
  j["tokens"] = s.tokens;
  if (s.rating) {
    j["rating"] = *s.rating;
  } else {
    j["rating"] = nullptr;
  }
  ordered_json spans = ordered_json::array();
  for (const ComplexSpan& span : s.spans) {
    ordered_json js;
    js["start"] = span.start;
    js["end"] = span.end;
    js["category"] = std::string(to_string(span.category));
    spans.push_back(std::move(js));
  }
  j["spans"] = std::move(spans);
  return j.dump();
}

LoadReport load_corpus(const std::filesystem::path& path, bool strict) {
  LoadReport report;
  std::vector<std::string> lines = read_lines(path);
  std::unordered_set<std::string> ids;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty()) {
      continue;
    }
    const std::string where = path.string() + ":" + std::to_string(i + 1);
    AnnotatedSentence s;
    try {
      s = parse_sentence_json(lines[i], strict);
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
    std::vector<Violation> violations = validate_sentence(s);
    if (!ids.insert(s.id).second) {
      violations.push_back({s.id, "duplicate-id", "id occurs more than once"});
    }
    if (!violations.empty()) {
      if (strict) {
        const Violation& v = violations.front();
        throw ValidationError(where + ": " + v.rule + ": " + v.message);
      }
      for (Violation& v : violations) {
        v.message = where + ": " + v.message;
        report.skipped.push_back(std::move(v));
      }
      continue;
    }
    report.corpus.push_back(std::move(s));
  }
  return report;
}

void save_corpus(const Corpus& corpus, const std::filesystem::path& path) {
  std::string out;
  for (const AnnotatedSentence& s : corpus) {
    out += sentence_to_json(s);
    out += '\n';
  }
  write_file_atomic(path, out);
}

std::vector<std::string> to_bio(const AnnotatedSentence& s) {
  std::vector<Violation> violations = validate_sentence(s);
  if (!violations.empty()) {
    throw ValidationError("invalid sentence '" + s.id +
                          "': " + violations.front().message);
  }
  std::vector<std::string> labels(s.tokens.size(), "O");
  for (const ComplexSpan& span : s.spans) {
    std::string cat(to_string(span.category));
    labels[span.start] = "B-" + cat;
    for (std::size_t i = span.start + 1; i < span.end; ++i) {
      labels[i] = "I-" + cat;
    }
  }
  return labels;
}

BioDecode from_bio(const std::vector<std::string>& tokens,
                   const std::vector<std::string>& labels) {
  if (tokens.size() != labels.size()) {
    throw std::invalid_argument("label count " + std::to_string(labels.size()) +
                                " does not match token count " +
                                std::to_string(tokens.size()));
  }
  BioDecode out;
  bool open = false;
  ComplexSpan current;
  auto close = [&]() {
    if (open) {
      out.spans.push_back(current);
      open = false;
    }
  };
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const std::string& label = labels[i];
    if (label == "O") {
      close();
      continue;
    }
    if (label.size() < 3 || (label[0] != 'B' && label[0] != 'I') ||
        label[1] != '-') {
      throw ParseError("unknown label: '" + label + "'");
    }
    SpanCategory cat = span_category_from_string(label.substr(2));
    if (label[0] == 'B') {
      close();
      current = {i, i + 1, cat};
      open = true;
    } else {
      if (open && current.category == cat) {
        current.end = i + 1;
      } else {
        // I- with no matching open span: treat as a span start.
        close();
        current = {i, i + 1, cat};
        open = true;
        out.repairs.push_back("token " + std::to_string(i) + ": " + label +
                              " without preceding B-; opened a new span");
      }
    }
  }
  close();
  return out;
}

std::vector<SourceSummaryRow> per_source_summary(const Corpus& corpus) {
  struct Cell {
    std::vector<double> ratings;
    std::size_t spans_medical = 0;
    std::size_t spans_general = 0;
    std::size_t spans_abbrev = 0;
  };
  std::map<std::pair<std::string, Side>, Cell> cells;
  for (const AnnotatedSentence& s : corpus) {
    if (!s.rating) {
      continue;
    }
    Cell& cell = cells[{s.source, s.side}];
    cell.ratings.push_back(*s.rating);
    for (const ComplexSpan& span : s.spans) {
      std::string_view label = collapse(span.category, Granularity::ThreeClass);
      if (label == "medical") {
        ++cell.spans_medical;
      } else if (label == "abbreviation") {
        ++cell.spans_abbrev;
      } else {
        ++cell.spans_general;
      }
    }
  }
  std::vector<SourceSummaryRow> rows;
  for (auto& [key, cell] : cells) {
    SourceSummaryRow row;
    row.source = key.first;
    row.side = key.second;
    row.n = cell.ratings.size();
    std::sort(cell.ratings.begin(), cell.ratings.end());
    double sum = 0;
    for (double r : cell.ratings) sum += r;
    double n = static_cast<double>(cell.ratings.size());
    row.mean_rating = sum / n;
    row.rating_q1 = quantile_sorted(cell.ratings, 0.25);
    row.rating_median = quantile_sorted(cell.ratings, 0.5);
    row.rating_q3 = quantile_sorted(cell.ratings, 0.75);
    row.mean_spans_medical = static_cast<double>(cell.spans_medical) / n;
    row.mean_spans_general_multisense =
        static_cast<double>(cell.spans_general) / n;
    row.mean_spans_abbreviation = static_cast<double>(cell.spans_abbrev) / n;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::map<std::string, Split> load_split_tsv(
    const std::filesystem::path& path) {
  std::map<std::string, Split> out;
  for (const auto& [id, split] : read_tsv_pairs(path)) {
    out[id] = split_from_string(split);
  }
  return out;
}

void apply_split_assignment(Corpus& corpus,
                            const std::map<std::string, Split>& splits) {
  std::unordered_map<std::string, AnnotatedSentence*> by_id;
  for (AnnotatedSentence& s : corpus) {
    by_id[s.id] = &s;
  }
  for (const auto& [id, split] : splits) {
    auto it = by_id.find(id);
    if (it == by_id.end()) {
      throw ValidationError("split assignment references unknown id '" + id +
                            "'");
    }
    it->second->split = split;
  }
}

}  // namespace medread
