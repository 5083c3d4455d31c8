#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "medread/corpus.hpp"

namespace medread {

enum class CorrelationStat { Pearson, KendallTauLike };

std::string_view to_string(CorrelationStat s);
CorrelationStat correlation_stat_from_string(std::string_view s);

// Product-moment correlation; needs >= 3 points and non-constant vectors.
double pearson(std::span<const double> x, std::span<const double> y);

// Pairwise concordance over gold-distinct pairs; prediction ties count
// discordant.
double kendall_tau_like(std::span<const double> gold,
                        std::span<const double> pred);

double correlate(CorrelationStat stat, std::span<const double> gold,
                 std::span<const double> pred);

double mean(std::span<const double> values);
double population_std(std::span<const double> values);

// Interpolated quantile of an ascending-sorted vector, q in [0, 1].
double quantile_sorted(std::span<const double> sorted, double q);

struct BootstrapConfig {
  std::size_t iters = 1000;
  double level = 0.95;
  std::uint64_t seed = 1u;
};

// Percentile interval from resampling pairs with replacement. Resample
// index streams come sequentially from a seeded mt19937_64, so identical
// seeds give identical intervals; resamples with an undefined statistic
// are redrawn up to 10 * iters attempts.
std::pair<double, double> bootstrap_ci(std::span<const double> gold,
                                       std::span<const double> pred,
                                       CorrelationStat stat,
                                       const BootstrapConfig& config);

// Krippendorff's alpha with interval distance (a-b)^2; rows are units,
// columns annotators, missing entries allowed.
double krippendorff_alpha_interval(
    const std::vector<std::vector<std::optional<double>>>& ratings);

struct CorrelationResult {
  CorrelationStat statistic = CorrelationStat::Pearson;
  std::string group;
  double r = 0.0;
  std::size_t n = 0;
  std::optional<std::pair<double, double>> ci;
};

enum class GroupBy { Source, None };

struct GroupedCorrelations {
  std::vector<CorrelationResult> groups;
  double mean = 0.0;
  double stddev = 0.0;  // population std over group correlations
  std::vector<std::string> skipped;
};

// One result per group (sources fold into their series) plus the
// unweighted mean +/- population std across groups. Groups with fewer
// than 3 scored+rated sentences are skipped and reported.
GroupedCorrelations grouped_correlation(
    const std::map<std::string, double>& scores,
    const std::map<std::string, double>& gold, const Corpus& corpus,
    GroupBy group_by, CorrelationStat stat,
    const std::optional<BootstrapConfig>& bootstrap);

struct LengthBucketedCorrelations {
  std::vector<CorrelationResult> buckets;
  std::vector<std::string> skipped;
};

// Sentences bucketed by word count at the given strictly increasing
// boundaries: (-inf, b1), [b1, b2), ..., [bk, +inf).
LengthBucketedCorrelations length_bucketed_correlation(
    const std::map<std::string, double>& scores,
    const std::map<std::string, double>& gold, const Corpus& corpus,
    const std::vector<double>& boundaries, CorrelationStat stat,
    const std::optional<BootstrapConfig>& bootstrap);

struct FeatureCorrelation {
  std::string feature;
  double r = 0.0;
  std::size_t n = 0;
  bool defined = true;  // false for constant features
};

// Per-feature Pearson against gold, ranked descending; constant features
// trail the ranking with defined=false.
std::vector<FeatureCorrelation> feature_correlations(
    const std::map<std::string, std::map<std::string, double>>& features,
    const std::map<std::string, double>& gold);

}  // namespace medread
