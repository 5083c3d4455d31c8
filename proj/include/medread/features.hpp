#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "medread/corpus.hpp"

namespace medread {

struct ResourceTables {
  std::unordered_map<std::string, double> aoa;   // word -> years
  std::unordered_map<std::string, double> zipf;  // word -> Zipf scale
  std::unordered_set<std::string> common2000;    // frequent-word list
  bool loaded = false;
};

// Expects aoa.tsv, zipf.tsv and common2000.txt in the directory.
ResourceTables load_resources(const std::filesystem::path& dir);

using FeatureVector = std::map<std::string, double>;

// Canonical feature order for tabular output.
const std::vector<std::string>& feature_ids();

// Lexical, resource-table and jargon-span features for one sentence.
// Words missing from the AoA/Zipf tables are skipped, not imputed.
FeatureVector extract_features(const AnnotatedSentence& sentence,
                               const ResourceTables& resources,
                               const std::vector<ComplexSpan>& spans);

}  // namespace medread
