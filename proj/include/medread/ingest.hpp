#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "medread/corpus.hpp"

namespace medread {

// Field mapping for ingesting a released dataset's native JSONL into the
// corpus schema. "fields" maps canonical names (id, source, side, split,
// tokens, rating, spans) to native keys; "span_fields" does the same for
// start/end/category inside a span object; "values" holds per-field
// translation tables applied to native strings; "defaults" fills fields
// absent from the input. Tokens may be a JSON array or, with
// tokens_split_whitespace, a single string.
struct IngestMapping {
  std::map<std::string, std::string> fields;
  std::map<std::string, std::string> span_fields;
  std::map<std::string, std::map<std::string, std::string>> values;
  std::map<std::string, std::string> defaults;
  bool tokens_split_whitespace = false;

  static IngestMapping from_json_file(const std::filesystem::path& path);
};

struct IngestReport {
  Corpus corpus;
  std::vector<Violation> skipped;  // lenient mode only
};

// Strict mode throws on the first invalid record; lenient skips and
// reports. The returned corpus is schema-valid either way.
IngestReport ingest_jsonl(const std::filesystem::path& input,
                          const IngestMapping& mapping, bool strict);

}  // namespace medread
