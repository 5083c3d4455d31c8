#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace medread {

enum class SpanCategory {
  GoogleEasy,
  GoogleHard,
  MedicalNameEntity,
  GeneralComplex,
  MultiSense,
  MedicalAbbreviation,
  GeneralAbbreviation,
};

inline constexpr int kNumSpanCategories = 7;
extern const SpanCategory kAllSpanCategories[kNumSpanCategories];

std::string_view to_string(SpanCategory category);
SpanCategory span_category_from_string(std::string_view s);

enum class Side { Complex, Simple };
enum class Split { Train, Dev, Test };

std::string_view to_string(Side side);
std::string_view to_string(Split split);
Side side_from_string(std::string_view s);
Split split_from_string(std::string_view s);

// Token-index range, end exclusive.
struct ComplexSpan {
  std::size_t start = 0;
  std::size_t end = 0;
  SpanCategory category = SpanCategory::GoogleEasy;

  friend bool operator==(const ComplexSpan&, const ComplexSpan&) = default;
};

struct AnnotatedSentence {
  std::string id;
  std::string source;
  Side side = Side::Complex;
  Split split = Split::Train;
  std::vector<std::string> tokens;
  std::optional<double> rating;  // CEFR-derived, in [0.7, 6.3]
  std::vector<ComplexSpan> spans;
};

using Corpus = std::vector<AnnotatedSentence>;

struct Violation {
  std::string sentence_id;
  std::string rule;
  std::string message;
};

inline constexpr double kMinRating = 0.7;
inline constexpr double kMaxRating = 6.3;

// The 15 resource ids plus "other".
const std::vector<std::string>& canonical_sources();
bool is_canonical_source(std::string_view source);

// Report grouping: the five NIHR and five PLOS sub-journals fold into
// "NIHR Series" / "PLOS Series"; the rest keep a display name.
std::string source_group(std::string_view source);

std::vector<Violation> validate_sentence(const AnnotatedSentence& sentence);
std::vector<Violation> validate(const Corpus& corpus);

struct LoadReport {
  Corpus corpus;
  std::vector<Violation> skipped;  // lenient mode: rejected records
};

// JSONL, one AnnotatedSentence per line. Strict mode throws on the first
// invariant violation or unknown field; lenient mode skips and reports.
// Unparseable lines throw ParseError in both modes.
LoadReport load_corpus(const std::filesystem::path& path, bool strict);

AnnotatedSentence parse_sentence_json(const std::string& line, bool strict);
std::string sentence_to_json(const AnnotatedSentence& sentence);
void save_corpus(const Corpus& corpus, const std::filesystem::path& path);

// One label per token: "O", "B-<category>", "I-<category>".
std::vector<std::string> to_bio(const AnnotatedSentence& sentence);

struct BioDecode {
  std::vector<ComplexSpan> spans;
  std::vector<std::string> repairs;  // lenient fixes, e.g. I- without B-
};

BioDecode from_bio(const std::vector<std::string>& tokens,
                   const std::vector<std::string>& labels);

struct SourceSummaryRow {
  std::string source;
  Side side = Side::Complex;
  std::size_t n = 0;  // rated sentences in the cell
  double mean_rating = 0;
  double rating_q1 = 0;
  double rating_median = 0;
  double rating_q3 = 0;
  // Mean gold spans per sentence at three-class granularity.
  double mean_spans_medical = 0;
  double mean_spans_general_multisense = 0;
  double mean_spans_abbreviation = 0;
};

// One row per (source, side) over rated sentences; cells without rated
// sentences are omitted.
std::vector<SourceSummaryRow> per_source_summary(const Corpus& corpus);

// Two-column TSV: id<TAB>split.
std::map<std::string, Split> load_split_tsv(const std::filesystem::path& path);

// Reassigns splits for the ids present in the map; ids that match no
// sentence throw ValidationError.
void apply_split_assignment(Corpus& corpus,
                            const std::map<std::string, Split>& splits);

}  // namespace medread
