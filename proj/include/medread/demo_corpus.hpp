#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "medread/corpus.hpp"

namespace medread {

inline constexpr std::uint64_t kDemoSeed = 77041;

// A self-contained, fully deterministic stand-in for the released corpus:
// 4,520 annotated sentences over the 15 canonical sources with
// complex/simple sides, 2,587/784/1,140 splits, gold spans in all seven
// categories, and resource tables for the word-level features. Sources
// differ in difficulty, harder sentences carry more jargon, and the
// simple side of every source is easier than its complex side.
struct DemoCorpus {
  Corpus corpus;
  std::map<std::string, std::uint64_t> wordfreq;
  std::map<std::string, double> aoa;
  std::map<std::string, double> zipf;
  std::vector<std::string> common2000;
  std::vector<std::string> common_words;
};

DemoCorpus make_demo_corpus(std::uint64_t seed = kDemoSeed);

// Writes wordfreq.tsv, aoa.tsv, zipf.tsv, common2000.txt and
// common_words.txt into dir.
void write_demo_resources(const DemoCorpus& demo,
                          const std::filesystem::path& dir);

}  // namespace medread
