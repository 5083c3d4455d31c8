#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <vector>

#include "medread/metrics.hpp"
#include "medread/stats.hpp"

using namespace medread;

namespace {

SentenceStats stats_with(std::size_t words, std::size_t syllables,
                         std::size_t chars, std::size_t poly) {
  SentenceStats s;
  s.n_words = words;
  s.n_syllables = syllables;
  s.n_chars = chars;
  s.n_polysyllables = poly;
  return s;
}

// Constant-table provider for hand-built cases.
class FixedProvider final : public SurprisalProvider {
 public:
  explicit FixedProvider(std::map<std::string, Surprisal> table)
      : table_(std::move(table)) {}
  Surprisal lookup(std::string_view word) const override {
    auto it = table_.find(std::string(word));
    if (it == table_.end()) {
      return {5.0, true};
    }
    return it->second;
  }

 private:
  std::map<std::string, Surprisal> table_;
};

}  // namespace

TEST_CASE("fkgl formula") {
  CHECK(fkgl(stats_with(1, 1, 1, 0)).value == doctest::Approx(-3.40).epsilon(1e-9));
  CHECK(fkgl(stats_with(20, 30, 80, 0)).value ==
        doctest::Approx(9.91).epsilon(1e-9));
  CHECK_THROWS_AS(fkgl(SentenceStats{}), std::invalid_argument);
  // Components record every formula input.
  MetricScore score = fkgl(stats_with(20, 30, 80, 0));
  CHECK(score.components.at("words") == 20);
  CHECK(score.components.at("syllables") == 30);
  CHECK(score.components.at("sentences") == 1);
}

TEST_CASE("ari formula") {
  CHECK(ari(stats_with(1, 1, 2, 0)).value ==
        doctest::Approx(-11.51).epsilon(1e-9));
  CHECK(ari(stats_with(10, 14, 50, 0)).value ==
        doctest::Approx(7.12).epsilon(1e-9));
}

TEST_CASE("smog formula") {
  CHECK(smog(stats_with(5, 5, 20, 0)).value ==
        doctest::Approx(3.1291).epsilon(1e-9));
  CHECK(smog(stats_with(10, 20, 50, 3)).value ==
        doctest::Approx(13.0239).epsilon(1e-4));
}

TEST_CASE("formulas are monotone in their driving quantity") {
  for (std::size_t extra = 1; extra < 10; ++extra) {
    CHECK(fkgl(stats_with(10, 12 + extra, 50, 0)).value >
          fkgl(stats_with(10, 12 + extra - 1, 50, 0)).value);
    CHECK(ari(stats_with(10, 12, 50 + extra, 0)).value >
          ari(stats_with(10, 12, 50 + extra - 1, 0)).value);
    CHECK(smog(stats_with(20, 30, 90, extra)).value >
          smog(stats_with(20, 30, 90, extra - 1)).value);
  }
}

TEST_CASE("length baseline") {
  CHECK(length_baseline(stats_with(1, 1, 2, 0)).value == 1);
  CHECK(length_baseline(stats_with(20, 25, 90, 0)).value == 20);
}

TEST_CASE("rsrs hand cases") {
  FixedProvider p({{"w", {0.8, false}}});
  CHECK(rsrs({"w"}, p).value == doctest::Approx(0.8).epsilon(1e-9));

  FixedProvider p3({{"a", {0.5, false}},
                    {"b", {2.0, false}},
                    {"c", {1.0, false}}});
  // Ascending 0.5, 1.0, 2.0 -> (1*0.5 + sqrt(2)*1.0 + sqrt(3)*2.0) / 3.
  CHECK(rsrs({"a", "b", "c"}, p3).value ==
        doctest::Approx(1.7928).epsilon(1e-4));

  FixedProvider p2({{"a", {1.0, false}}, {"b", {2.0, true}}});
  // OOV at rank 2 gets weight (sqrt(2))^2 = 2.
  CHECK(rsrs({"a", "b"}, p2).value == doctest::Approx(2.5).epsilon(1e-9));
}

TEST_CASE("rsrs ignores punctuation tokens and rejects empties") {
  FixedProvider p({{"a", {1.0, false}}});
  CHECK(rsrs({"a", ".", ","}, p).value == doctest::Approx(1.0));
  CHECK_THROWS_AS(rsrs({".", ","}, p), std::invalid_argument);
}

TEST_CASE("rsrs is invariant under word order") {
  std::mt19937 eng(3);
  std::map<std::string, Surprisal> table;
  std::vector<std::string> words;
  for (int i = 0; i < 12; ++i) {
    std::string w = "w" + std::to_string(i);
    table[w] = {0.1 * static_cast<double>(eng() % 40),
                (eng() % 4) == 0};
    words.push_back(w);
  }
  FixedProvider p(table);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::string> tokens;
    std::size_t len = 1 + eng() % 10;
    for (std::size_t i = 0; i < len; ++i) {
      tokens.push_back(words[eng() % words.size()]);
    }
    std::vector<std::string> shuffled = tokens;
    std::shuffle(shuffled.begin(), shuffled.end(), eng);
    CHECK(rsrs(tokens, p).value ==
          doctest::Approx(rsrs(shuffled, p).value).epsilon(1e-12));
  }
}

TEST_CASE("rsrs closed form for equal losses") {
  // With equal WNLL w and no OOV, RSRS = w * sum(sqrt(i)) / S.
  for (std::size_t s = 1; s <= 5; ++s) {
    std::map<std::string, Surprisal> table;
    std::vector<std::string> tokens;
    for (std::size_t i = 0; i < s; ++i) {
      std::string w = "x" + std::to_string(i);
      table[w] = {1.3, false};
      tokens.push_back(w);
    }
    double expected = 0;
    for (std::size_t i = 1; i <= s; ++i) {
      expected += std::sqrt(static_cast<double>(i));
    }
    expected = 1.3 * expected / static_cast<double>(s);
    FixedProvider p(table);
    CHECK(rsrs(tokens, p).value == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("jar_variant") {
  MetricScore base = fkgl(stats_with(20, 30, 80, 0));
  base.value = 10.0;
  MetricScore jar = jar_variant(base, 2, 4.85);
  CHECK(jar.metric == Metric::FkglJar);
  CHECK(jar.value == doctest::Approx(19.70).epsilon(1e-9));
  CHECK(jar.components.at("alpha") == doctest::Approx(4.85));
  CHECK(jar.components.at("jargon_spans") == 2);

  // Zero spans: scaled base only.
  CHECK(jar_variant(base, 0, 4.85).value == doctest::Approx(10.0));
  MetricScore rsrs_base;
  rsrs_base.metric = Metric::Rsrs;
  rsrs_base.value = 0.9;
  CHECK(jar_variant(rsrs_base, 0, 0.45).value == doctest::Approx(90.0));
  CHECK(jar_variant(rsrs_base, 1, 0.45).value == doctest::Approx(90.45));

  // Alpha zero reproduces the (scaled) base exactly.
  CHECK(jar_variant(base, 7, 0.0).value == base.value);
  CHECK_THROWS_AS(jar_variant(base, 1, -0.1), std::invalid_argument);
  MetricScore len;
  len.metric = Metric::Length;
  CHECK_THROWS_AS(jar_variant(len, 1, 1.0), std::invalid_argument);
}

TEST_CASE("tune_alpha recovers a planted coefficient") {
  // gold = base + 3 * count exactly; the grid lacks 3.0, so the optimum
  // is the nearest grid point. An exhaustive re-scan is the oracle.
  std::mt19937 eng(17);
  std::vector<DevPoint> dev;
  for (int i = 0; i < 60; ++i) {
    double base = static_cast<double>(eng() % 100) / 10.0;
    std::size_t count = eng() % 5;
    dev.push_back({base, count, base + 3.0 * static_cast<double>(count)});
  }
  AlphaGrid grid{0.0, 10.0, 0.4};
  AlphaResult result = tune_alpha(Metric::Fkgl, dev, grid);
  CHECK(std::abs(result.alpha - 3.0) <= 0.4 + 1e-9);

  // Oracle: no grid point beats the returned one.
  for (int k = 0; k <= 25; ++k) {
    double alpha = 0.4 * k;
    std::vector<double> combined, gold;
    for (const DevPoint& p : dev) {
      combined.push_back(p.base_value +
                         alpha * static_cast<double>(p.jargon_spans));
      gold.push_back(p.gold);
    }
    CHECK(pearson(combined, gold) <= result.pearson + 1e-12);
  }
}

TEST_CASE("tune_alpha keeps the grid floor when counts are noise") {
  std::mt19937 eng(23);
  std::vector<DevPoint> dev;
  for (int i = 0; i < 80; ++i) {
    double base = static_cast<double>(i);
    dev.push_back({base, eng() % 6, base});  // gold == base exactly
  }
  AlphaResult result = tune_alpha(Metric::Fkgl, dev, {0.0, 5.0, 0.25});
  CHECK(result.alpha == doctest::Approx(0.0));
  CHECK(result.pearson == doctest::Approx(1.0));
}

TEST_CASE("tune_alpha pre-scales rsrs by 100") {
  // gold = 100 * base + 2 * count; tuning on the rsrs metric must find
  // alpha near 2 because the base is scaled before the search.
  std::mt19937 eng(29);
  std::vector<DevPoint> dev;
  for (int i = 0; i < 50; ++i) {
    double base = static_cast<double>(eng() % 100) / 100.0;
    std::size_t count = eng() % 4;
    dev.push_back({base, count, 100.0 * base + 2.0 * static_cast<double>(count)});
  }
  AlphaResult result = tune_alpha(Metric::Rsrs, dev, {0.0, 10.0, 0.5});
  CHECK(std::abs(result.alpha - 2.0) <= 0.5 + 1e-9);
}

TEST_CASE("tune_alpha rejects degenerate inputs") {
  std::vector<DevPoint> two = {{1, 0, 1}, {2, 1, 2}};
  CHECK_THROWS_AS(tune_alpha(Metric::Fkgl, two, {0, 1, 0.1}),
                  std::invalid_argument);
  std::vector<DevPoint> constant_gold = {{1, 0, 2}, {2, 1, 2}, {3, 2, 2}};
  CHECK_THROWS_AS(tune_alpha(Metric::Fkgl, constant_gold, {0, 1, 0.1}),
                  std::invalid_argument);
  std::vector<DevPoint> fine = {{1, 0, 1}, {2, 1, 2}, {3, 2, 3}};
  CHECK_THROWS_AS(tune_alpha(Metric::Fkgl, fine, {1, 0, 0.1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(tune_alpha(Metric::Fkgl, fine, {0, 1, 0.0}),
                  std::invalid_argument);
}

TEST_CASE("unigram surprisal add-one smoothing") {
  UnigramSurprisal provider({{"the", 6}, {"cat", 3}});
  // N = 9, V = 2 -> denom 11.
  Surprisal the = provider.lookup("the");
  CHECK(the.oov == false);
  CHECK(the.wnll == doctest::Approx(std::log(11.0 / 7.0)).epsilon(1e-12));
  Surprisal cat = provider.lookup("CAT");  // case-folded lookup
  CHECK(cat.wnll == doctest::Approx(std::log(11.0 / 4.0)).epsilon(1e-12));
  Surprisal missing = provider.lookup("dog");
  CHECK(missing.oov == true);
  CHECK(missing.wnll == doctest::Approx(std::log(11.0)).epsilon(1e-12));
  // OOV loss dominates every in-vocabulary loss.
  CHECK(missing.wnll > the.wnll);
}

TEST_CASE("metric names round-trip") {
  for (Metric m : {Metric::Length, Metric::Fkgl, Metric::Ari, Metric::Smog,
                   Metric::Rsrs, Metric::FkglJar, Metric::AriJar,
                   Metric::SmogJar, Metric::RsrsJar}) {
    CHECK(metric_from_string(to_string(m)) == m);
  }
  CHECK(jar_of(Metric::Smog) == Metric::SmogJar);
  CHECK(base_of(Metric::RsrsJar) == Metric::Rsrs);
  CHECK_THROWS(metric_from_string("flesch"));
}
