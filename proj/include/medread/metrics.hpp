#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "medread/analyzers.hpp"

namespace medread {

enum class Metric {
  Length,
  Fkgl,
  Ari,
  Smog,
  Rsrs,
  FkglJar,
  AriJar,
  SmogJar,
  RsrsJar,
};

std::string_view to_string(Metric m);
Metric metric_from_string(std::string_view s);
bool is_jar_metric(Metric m);
Metric jar_of(Metric base);
Metric base_of(Metric jar);

struct MetricScore {
  Metric metric = Metric::Length;
  double value = 0.0;
  // Every quantity the formula consumed, by name.
  std::map<std::string, double> components;
};

// Per-sentence application: total sentences fixed at 1.
MetricScore fkgl(const SentenceStats& stats);
MetricScore ari(const SentenceStats& stats);
MetricScore smog(const SentenceStats& stats);
MetricScore length_baseline(const SentenceStats& stats);

struct Surprisal {
  double wnll = 0.0;  // negative log-likelihood, >= 0
  bool oov = false;
};

class SurprisalProvider {
 public:
  virtual ~SurprisalProvider() = default;
  // Must be deterministic per word and safe for concurrent lookups.
  virtual Surprisal lookup(std::string_view word) const = 0;
};

// Word losses sorted ascending; rank i weighted by (sqrt(i))^a with a = 2
// for OOV words, 1 otherwise; mean over words.
MetricScore rsrs(const std::vector<std::string>& tokens,
                 const SurprisalProvider& provider);

// Add-one-smoothed unigram table: wnll = -log((count + 1) / (N + V)).
class UnigramSurprisal final : public SurprisalProvider {
 public:
  explicit UnigramSurprisal(
      std::unordered_map<std::string, std::uint64_t> counts);
  static UnigramSurprisal from_tsv(const std::filesystem::path& path);

  Surprisal lookup(std::string_view word) const override;
  std::size_t vocabulary_size() const { return wnll_.size(); }

 private:
  std::unordered_map<std::string, double> wnll_;
  double oov_wnll_ = 0.0;
};

inline constexpr double kRsrsJarScale = 100.0;

// value = scale * base + alpha * jargon_spans; scale is 100 for RSRS and
// 1 otherwise.
MetricScore jar_variant(const MetricScore& base, std::size_t jargon_spans,
                        double alpha);

struct AlphaGrid {
  double lo = 0.0;
  double hi = 20.0;
  double step = 0.05;
};

struct DevPoint {
  double base_value = 0.0;
  std::size_t jargon_spans = 0;
  double gold = 0.0;
};

struct AlphaResult {
  double alpha = 0.0;
  double pearson = 0.0;
};

// Grid point maximizing Pearson(scale * base + alpha * count, gold); ties
// resolve to the smallest alpha.
AlphaResult tune_alpha(Metric base_metric, const std::vector<DevPoint>& dev,
                       const AlphaGrid& grid);

// TSV "metric<TAB>alpha", keyed by jar-metric name (e.g. "fkgl-jar").
std::map<Metric, double> load_alpha_tsv(const std::filesystem::path& path);
void save_alpha_tsv(const std::map<Metric, double>& alphas,
                    const std::filesystem::path& path);

}  // namespace medread
