#include <doctest.h>

#include <filesystem>

#include "medread/error.hpp"
#include "medread/ingest.hpp"
#include "medread/io.hpp"

using namespace medread;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
  fs::path dir = fs::temp_directory_path() / "medread_ingest_test";
  fs::create_directories(dir);
  return dir;
}

IngestMapping demo_mapping() {
  IngestMapping m;
  m.fields = {{"id", "sent_id"},   {"source", "corpus"},
              {"side", "version"}, {"split", "partition"},
              {"tokens", "text"},  {"rating", "cefr"},
              {"spans", "entities"}};
  m.span_fields = {{"start", "begin"}, {"end", "stop"}, {"category", "label"}};
  m.values = {{"side", {{"original", "complex"}, {"simplified", "simple"}}},
              {"split", {{"training", "train"}}},
              {"source", {{"PLOS Biology", "plos-biology"}}},
              {"category", {{"GOOGLE_EASY", "google-easy"}}}};
  m.defaults = {{"split", "train"}};
  return m;
}

}  // namespace

TEST_CASE("ingest maps fields, values and spans") {
  fs::path in = temp_dir() / "native.jsonl";
  write_file_atomic(
      in,
      "{\"sent_id\":\"n1\",\"corpus\":\"PLOS Biology\",\"version\":"
      "\"original\",\"partition\":\"training\",\"text\":\"The tumour was "
      "resected\",\"cefr\":4.3,\"entities\":[{\"begin\":1,\"stop\":2,"
      "\"label\":\"GOOGLE_EASY\"}]}\n"
      "{\"sent_id\":\"n2\",\"corpus\":\"PLOS Biology\",\"version\":"
      "\"simplified\",\"text\":[\"The\",\"growth\",\"was\",\"removed\"],"
      "\"cefr\":null}\n");
  IngestReport report = ingest_jsonl(in, demo_mapping(), /*strict=*/true);
  REQUIRE(report.corpus.size() == 2);
  const AnnotatedSentence& a = report.corpus[0];
  CHECK(a.id == "n1");
  CHECK(a.source == "plos-biology");
  CHECK(a.side == Side::Complex);
  CHECK(a.split == Split::Train);
  CHECK(a.tokens == std::vector<std::string>{"The", "tumour", "was",
                                             "resected"});
  CHECK(a.rating == doctest::Approx(4.3));
  REQUIRE(a.spans.size() == 1);
  CHECK(a.spans[0] == ComplexSpan{1, 2, SpanCategory::GoogleEasy});

  const AnnotatedSentence& b = report.corpus[1];
  CHECK(b.side == Side::Simple);
  CHECK(b.split == Split::Train);  // default applied
  CHECK(!b.rating.has_value());
  CHECK(b.tokens.size() == 4);
}

TEST_CASE("ingest strict vs lenient") {
  fs::path in = temp_dir() / "mixed.jsonl";
  // Second record has an inverted span.
  write_file_atomic(
      in,
      "{\"sent_id\":\"g\",\"corpus\":\"PLOS Biology\",\"version\":"
      "\"original\",\"text\":\"a b c\",\"entities\":[]}\n"
      "{\"sent_id\":\"bad\",\"corpus\":\"PLOS Biology\",\"version\":"
      "\"original\",\"text\":\"a b c\",\"entities\":[{\"begin\":2,\"stop\":1,"
      "\"label\":\"GOOGLE_EASY\"}]}\n");
  CHECK_THROWS_AS((void)ingest_jsonl(in, demo_mapping(), true),
                  ValidationError);
  IngestReport lenient = ingest_jsonl(in, demo_mapping(), false);
  CHECK(lenient.corpus.size() == 1);
  CHECK(lenient.skipped.size() == 1);
}

TEST_CASE("ingest mapping file round trip") {
  fs::path path = temp_dir() / "mapping.json";
  write_file_atomic(path,
                    "{\"fields\":{\"id\":\"sent_id\"},"
                    "\"span_fields\":{\"start\":\"begin\"},"
                    "\"values\":{\"side\":{\"orig\":\"complex\"}},"
                    "\"defaults\":{\"split\":\"dev\"},"
                    "\"tokens_split_whitespace\":true}");
  IngestMapping m = IngestMapping::from_json_file(path);
  CHECK(m.fields.at("id") == "sent_id");
  CHECK(m.span_fields.at("start") == "begin");
  CHECK(m.values.at("side").at("orig") == "complex");
  CHECK(m.defaults.at("split") == "dev");
  CHECK(m.tokens_split_whitespace);

  write_file_atomic(path, "{broken");
  CHECK_THROWS_AS(IngestMapping::from_json_file(path), ParseError);
}

TEST_CASE("ingest unmapped sources fail validation") {
  fs::path in = temp_dir() / "unmapped.jsonl";
  write_file_atomic(in,
                    "{\"sent_id\":\"u\",\"corpus\":\"Some Blog\",\"version\":"
                    "\"original\",\"text\":\"a b\"}\n");
  CHECK_THROWS_AS((void)ingest_jsonl(in, demo_mapping(), true),
                  ValidationError);
  IngestReport lenient = ingest_jsonl(in, demo_mapping(), false);
  CHECK(lenient.corpus.empty());
  REQUIRE(!lenient.skipped.empty());
  CHECK(lenient.skipped.front().rule == "unknown-source");
}
