#include "medread/ingest.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "medread/error.hpp"
#include "medread/io.hpp"

namespace medread {

namespace {

using nlohmann::json;

std::string translate(const IngestMapping& mapping, const std::string& field,
                      const std::string& raw) {
  auto table_it = mapping.values.find(field);
  if (table_it == mapping.values.end()) {
    return raw;
  }
  auto it = table_it->second.find(raw);
  return it == table_it->second.end() ? raw : it->second;
}

std::string native_key(const IngestMapping& mapping, const std::string& field) {
  auto it = mapping.fields.find(field);
  return it == mapping.fields.end() ? field : it->second;
}

std::string span_key(const IngestMapping& mapping, const std::string& field) {
  auto it = mapping.span_fields.find(field);
  return it == mapping.span_fields.end() ? field : it->second;
}

std::optional<std::string> string_field(const json& j,
                                        const IngestMapping& mapping,
                                        const std::string& field) {
  std::string key = native_key(mapping, field);
  if (j.contains(key) && !j[key].is_null()) {
    if (j[key].is_string()) {
      return j[key].get<std::string>();
    }
    // Tolerate numeric ids and the like.
    return j[key].dump();
  }
  auto def = mapping.defaults.find(field);
  if (def != mapping.defaults.end()) {
    return def->second;
  }
  return std::nullopt;
}

std::vector<std::string> split_whitespace(const std::string& text) {
  std::vector<std::string> tokens;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    tokens.push_back(token);
  }
  return tokens;
}

AnnotatedSentence convert_record(const json& j, const IngestMapping& mapping) {
  AnnotatedSentence s;
  auto require = [&](const std::string& field) {
    std::optional<std::string> value = string_field(j, mapping, field);
    if (!value) {
      throw ParseError("missing field '" + native_key(mapping, field) + "'");
    }
    return translate(mapping, field, *value);
  };

  s.id = require("id");
  s.source = require("source");
  s.side = side_from_string(translate(mapping, "side", require("side")));
  s.split = split_from_string(translate(mapping, "split", require("split")));

  std::string tokens_key = native_key(mapping, "tokens");
  if (!j.contains(tokens_key)) {
    throw ParseError("missing field '" + tokens_key + "'");
  }
  const json& jt = j[tokens_key];
  if (jt.is_string()) {
    s.tokens = split_whitespace(jt.get<std::string>());
  } else if (jt.is_array()) {
    if (mapping.tokens_split_whitespace) {
      for (const auto& part : jt) {
        for (std::string& t : split_whitespace(part.get<std::string>())) {
          s.tokens.push_back(std::move(t));
        }
      }
    } else {
      s.tokens = jt.get<std::vector<std::string>>();
    }
  } else {
    throw ParseError("field '" + tokens_key + "' is neither string nor array");
  }

  std::string rating_key = native_key(mapping, "rating");
  if (j.contains(rating_key) && !j[rating_key].is_null()) {
    if (j[rating_key].is_number()) {
      s.rating = j[rating_key].get<double>();
    } else if (j[rating_key].is_string()) {
      s.rating = parse_double(j[rating_key].get<std::string>(), "rating");
    } else {
      throw ParseError("field '" + rating_key + "' is not a number");
    }
  }

  std::string spans_key = native_key(mapping, "spans");
  if (j.contains(spans_key) && !j[spans_key].is_null()) {
    for (const auto& js : j[spans_key]) {
      ComplexSpan span;
      span.start = js.at(span_key(mapping, "start")).get<std::size_t>();
      span.end = js.at(span_key(mapping, "end")).get<std::size_t>();
      std::string raw_category =
          js.at(span_key(mapping, "category")).get<std::string>();
      span.category = span_category_from_string(
          translate(mapping, "category", raw_category));
      s.spans.push_back(span);
    }
    std::sort(s.spans.begin(), s.spans.end(),
              [](const ComplexSpan& a, const ComplexSpan& b) {
                return a.start != b.start ? a.start < b.start : a.end < b.end;
              });
  }
  return s;
}

}  // namespace

IngestMapping IngestMapping::from_json_file(
    const std::filesystem::path& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": malformed mapping: " + e.what());
  }
  IngestMapping mapping;
  try {
    if (j.contains("fields")) {
      mapping.fields = j["fields"].get<std::map<std::string, std::string>>();
    }
    if (j.contains("span_fields")) {
      mapping.span_fields =
          j["span_fields"].get<std::map<std::string, std::string>>();
    }
    if (j.contains("values")) {
      mapping.values =
          j["values"]
              .get<std::map<std::string, std::map<std::string, std::string>>>();
    }
    if (j.contains("defaults")) {
      mapping.defaults =
          j["defaults"].get<std::map<std::string, std::string>>();
    }
    if (j.contains("tokens_split_whitespace")) {
      mapping.tokens_split_whitespace =
          j["tokens_split_whitespace"].get<bool>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": bad mapping: " + e.what());
  }
  return mapping;
}

IngestReport ingest_jsonl(const std::filesystem::path& input,
                          const IngestMapping& mapping, bool strict) {
  IngestReport report;
  std::vector<std::string> lines = read_lines(input);
  std::unordered_set<std::string> ids;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty()) {
      continue;
    }
    const std::string where = input.string() + ":" + std::to_string(i + 1);
    AnnotatedSentence s;
    try {
      json j = json::parse(lines[i]);
      s = convert_record(j, mapping);
    } catch (const nlohmann::json::exception& e) {
      if (strict) {
        throw ParseError(where + ": " + e.what());
      }
      report.skipped.push_back({"", "malformed-record", where});
      continue;
    } catch (const ParseError& e) {
      if (strict) {
        throw ParseError(where + ": " + e.what());
      }
      report.skipped.push_back({"", "malformed-record",
                                where + ": " + e.what()});
      continue;
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

}  // namespace medread
