#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "medread/corpus.hpp"
#include "medread/error.hpp"
#include "medread/io.hpp"

using namespace medread;
namespace fs = std::filesystem;

namespace {

AnnotatedSentence make_sentence(std::string id = "s1") {
  AnnotatedSentence s;
  s.id = std::move(id);
  s.source = "cochrane";
  s.side = Side::Complex;
  s.split = Split::Train;
  s.tokens = {"The", "trial", "was", "small", "."};
  s.rating = 3.3;
  return s;
}

fs::path temp_dir() {
  fs::path dir = fs::temp_directory_path() / "medread_corpus_test";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("validate_sentence catches each invariant") {
  CHECK(validate_sentence(make_sentence()).empty());

  AnnotatedSentence s = make_sentence();
  s.tokens.clear();
  CHECK(validate_sentence(s).size() >= 1);

  s = make_sentence();
  s.tokens[1] = "two words";
  CHECK(validate_sentence(s).front().rule == "token-whitespace");

  s = make_sentence();
  s.rating = 6.4;
  CHECK(validate_sentence(s).front().rule == "rating-range");
  s.rating = 6.3;
  CHECK(validate_sentence(s).empty());
  s.rating = 0.7;
  CHECK(validate_sentence(s).empty());
  s.rating = 0.69;
  CHECK(!validate_sentence(s).empty());

  s = make_sentence();
  s.spans = {{3, 2, SpanCategory::GoogleEasy}};
  auto violations = validate_sentence(s);
  REQUIRE(!violations.empty());
  CHECK(violations.front().rule == "span-bounds");
  CHECK(violations.front().message.find("start < end violated") !=
        std::string::npos);

  s = make_sentence();
  s.spans = {{0, 2, SpanCategory::GoogleEasy},
             {1, 3, SpanCategory::GoogleHard}};
  violations = validate_sentence(s);
  REQUIRE(!violations.empty());
  CHECK(violations.front().rule == "span-overlap");

  s = make_sentence();
  s.source = "nature";
  CHECK(validate_sentence(s).front().rule == "unknown-source");
}

TEST_CASE("validate reports duplicate ids") {
  Corpus corpus = {make_sentence("s1"), make_sentence("s1")};
  auto violations = validate(corpus);
  REQUIRE(violations.size() == 1);
  CHECK(violations.front().rule == "duplicate-id");
  corpus[1].id = "s2";
  CHECK(validate(corpus).empty());
}

TEST_CASE("load_corpus round trip and modes") {
  fs::path path = temp_dir() / "corpus.jsonl";
  Corpus corpus = {make_sentence("s1"), make_sentence("s2")};
  corpus[1].spans = {{1, 3, SpanCategory::MedicalAbbreviation}};
  corpus[1].rating.reset();
  save_corpus(corpus, path);

  LoadReport loaded = load_corpus(path, /*strict=*/true);
  REQUIRE(loaded.corpus.size() == 2);
  CHECK(loaded.corpus[0].id == "s1");
  CHECK(loaded.corpus[0].rating == doctest::Approx(3.3));
  CHECK(!loaded.corpus[1].rating.has_value());
  CHECK(loaded.corpus[1].spans.size() == 1);

  // load -> serialize -> load is a fixed point.
  fs::path second = temp_dir() / "corpus2.jsonl";
  save_corpus(loaded.corpus, second);
  CHECK(read_file(path) == read_file(second));

  // Strict mode aborts on a bad span; lenient skips and reports.
  fs::path bad = temp_dir() / "bad.jsonl";
  Corpus bad_corpus = {make_sentence("ok"), make_sentence("bad")};
  bad_corpus[1].spans = {{3, 2, SpanCategory::GoogleEasy}};
  std::string content;
  for (const auto& s : bad_corpus) {
    content += sentence_to_json(s) + "\n";
  }
  write_file_atomic(bad, content);
  CHECK_THROWS_WITH_AS(
      (void)load_corpus(bad, true),
      doctest::Contains("start < end violated"), ValidationError);
  LoadReport lenient = load_corpus(bad, false);
  CHECK(lenient.corpus.size() == 1);
  CHECK(lenient.skipped.size() == 1);
  CHECK(lenient.skipped.front().rule == "span-bounds");

  // Rating boundary 6.3 accepted, 6.4 rejected.
  Corpus boundary = {make_sentence("b1")};
  boundary[0].rating = 6.3;
  save_corpus(boundary, bad);
  CHECK(load_corpus(bad, true).corpus.size() == 1);
  boundary[0].rating = 6.4;
  std::string line = sentence_to_json(boundary[0]);
  write_file_atomic(bad, line + "\n");
  CHECK_THROWS_AS((void)load_corpus(bad, true), ValidationError);
  CHECK(load_corpus(bad, false).corpus.empty());
}

TEST_CASE("load_corpus rejects malformed and unknown content") {
  fs::path path = temp_dir() / "malformed.jsonl";
  write_file_atomic(path, "{not json\n");
  CHECK_THROWS_WITH_AS((void)load_corpus(path, false),
                       doctest::Contains(":1"), ParseError);

  // Unknown field: strict rejects, lenient ignores.
  std::string line = sentence_to_json(make_sentence());
  line.insert(line.size() - 1, ",\"extra\":1");
  write_file_atomic(path, line + "\n");
  CHECK_THROWS_AS((void)load_corpus(path, true), ParseError);
  CHECK(load_corpus(path, false).corpus.size() == 1);
}

TEST_CASE("to_bio basics") {
  AnnotatedSentence s = make_sentence();
  s.tokens = {"a", "b", "c"};
  CHECK(to_bio(s) == std::vector<std::string>{"O", "O", "O"});

  s.spans = {{0, 2, SpanCategory::GoogleEasy}};
  CHECK(to_bio(s) ==
        std::vector<std::string>{"B-google-easy", "I-google-easy", "O"});

  s.spans = {{2, 3, SpanCategory::MedicalAbbreviation}};
  CHECK(to_bio(s) ==
        std::vector<std::string>{"O", "O", "B-medical-abbreviation"});

  s.spans = {{3, 2, SpanCategory::GoogleEasy}};
  CHECK_THROWS_AS((void)to_bio(s), ValidationError);
}

TEST_CASE("from_bio inverse and repair") {
  std::vector<std::string> tokens = {"a", "b", "c"};
  BioDecode d = from_bio(tokens, {"O", "O", "O"});
  CHECK(d.spans.empty());
  CHECK(d.repairs.empty());

  d = from_bio(tokens, {"B-google-easy", "I-google-easy", "O"});
  REQUIRE(d.spans.size() == 1);
  CHECK(d.spans[0] == ComplexSpan{0, 2, SpanCategory::GoogleEasy});

  // Dangling I- opens a new span and reports the repair.
  d = from_bio(tokens, {"O", "I-google-hard", "O"});
  REQUIRE(d.spans.size() == 1);
  CHECK(d.spans[0] == ComplexSpan{1, 2, SpanCategory::GoogleHard});
  CHECK(d.repairs.size() == 1);

  // Category switch inside an I-run also repairs.
  d = from_bio(tokens, {"B-google-easy", "I-google-hard", "O"});
  REQUIRE(d.spans.size() == 2);
  CHECK(d.repairs.size() == 1);

  CHECK_THROWS_AS((void)from_bio(tokens, {"O", "O"}), std::invalid_argument);
  CHECK_THROWS_AS((void)from_bio(tokens, {"O", "X-google-easy", "O"}),
                  ParseError);
  CHECK_THROWS_AS((void)from_bio(tokens, {"O", "B-googly", "O"}), ParseError);
}

TEST_CASE("bio round trip on random valid layouts") {
  std::mt19937 eng(41);
  for (int trial = 0; trial < 300; ++trial) {
    AnnotatedSentence s = make_sentence("r" + std::to_string(trial));
    std::size_t len = 1 + eng() % 20;
    s.tokens.assign(len, "tok");
    std::size_t pos = 0;
    while (pos < len) {
      if (eng() % 3 == 0) {
        std::size_t span_len = 1 + eng() % 3;
        std::size_t end = std::min(len, pos + span_len);
        s.spans.push_back(
            {pos, end,
             static_cast<SpanCategory>(eng() % kNumSpanCategories)});
        pos = end + eng() % 2;
      } else {
        ++pos;
      }
    }
    BioDecode d = from_bio(s.tokens, to_bio(s));
    CHECK(d.spans == s.spans);
    CHECK(d.repairs.empty());
  }
}

TEST_CASE("per_source_summary") {
  Corpus corpus;
  AnnotatedSentence a = make_sentence("a");
  a.rating = 2.0;
  AnnotatedSentence b = make_sentence("b");
  b.rating = 4.0;
  b.spans = {{0, 2, SpanCategory::GoogleEasy},
             {3, 4, SpanCategory::MedicalAbbreviation}};
  AnnotatedSentence unrated = make_sentence("c");
  unrated.rating.reset();
  unrated.source = "wiki";
  corpus = {a, b, unrated};

  auto rows = per_source_summary(corpus);
  REQUIRE(rows.size() == 1);  // wiki cell has no rated sentences
  CHECK(rows[0].source == "cochrane");
  CHECK(rows[0].n == 2);
  CHECK(rows[0].mean_rating == doctest::Approx(3.0));
  CHECK(rows[0].mean_spans_medical == doctest::Approx(0.5));
  CHECK(rows[0].mean_spans_abbreviation == doctest::Approx(0.5));

  // Single rated sentence: quartiles collapse onto the value.
  auto single = per_source_summary({a});
  REQUIRE(single.size() == 1);
  CHECK(single[0].rating_q1 == doctest::Approx(2.0));
  CHECK(single[0].rating_median == doctest::Approx(2.0));
  CHECK(single[0].rating_q3 == doctest::Approx(2.0));
}

TEST_CASE("split TSV assignment") {
  fs::path path = temp_dir() / "splits.tsv";
  write_file_atomic(path, "s1\tdev\ns2\ttest\n");
  auto splits = load_split_tsv(path);
  Corpus corpus = {make_sentence("s1"), make_sentence("s2"),
                   make_sentence("s3")};
  apply_split_assignment(corpus, splits);
  CHECK(corpus[0].split == Split::Dev);
  CHECK(corpus[1].split == Split::Test);
  CHECK(corpus[2].split == Split::Train);  // untouched

  splits["missing"] = Split::Dev;
  CHECK_THROWS_AS(apply_split_assignment(corpus, splits), ValidationError);
}

TEST_CASE("source grouping") {
  CHECK(source_group("nihr-public-health-research") == "NIHR Series");
  CHECK(source_group("plos-genetics") == "PLOS Series");
  CHECK(source_group("cochrane") == "Cochrane");
  CHECK(source_group("elife") == "eLife");
  CHECK(canonical_sources().size() == 16);
  CHECK(is_canonical_source("msd"));
  CHECK(!is_canonical_source("bmj"));
}
