#include "medread/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "medread/analyzers.hpp"
#include "medread/error.hpp"

namespace medread {

std::string_view to_string(CorrelationStat s) {
  return s == CorrelationStat::Pearson ? "pearson" : "kendall-tau-like";
}

CorrelationStat correlation_stat_from_string(std::string_view s) {
  if (s == "pearson") return CorrelationStat::Pearson;
  if (s == "kendall-tau-like" || s == "kendall") {
    return CorrelationStat::KendallTauLike;
  }
  throw ParseError("unknown statistic: '" + std::string(s) + "'");
}

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("pearson: length mismatch");
  }
  if (x.size() < 3) {
    throw std::invalid_argument("pearson: need at least 3 points");
  }
  double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double dx = x[i] - mx;
    double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0 || syy == 0) {
    throw std::invalid_argument("pearson: constant vector");
  }
  return sxy / std::sqrt(sxx * syy);
}

double kendall_tau_like(std::span<const double> gold,
                        std::span<const double> pred) {
  if (gold.size() != pred.size()) {
    throw std::invalid_argument("kendall: length mismatch");
  }
  if (gold.size() < 2) {
    throw std::invalid_argument("kendall: need at least 2 points");
  }
  std::size_t concordant = 0, discordant = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    for (std::size_t j = i + 1; j < gold.size(); ++j) {
      if (gold[i] == gold[j]) {
        continue;
      }
      double g = gold[i] - gold[j];
      double p = pred[i] - pred[j];
      if (p == 0 || (g > 0) != (p > 0)) {
        ++discordant;  // prediction ties count against the metric
      } else {
        ++concordant;
      }
    }
  }
  if (concordant + discordant == 0) {
    throw std::invalid_argument("kendall: all gold values tied");
  }
  return (static_cast<double>(concordant) - static_cast<double>(discordant)) /
         static_cast<double>(concordant + discordant);
}

double correlate(CorrelationStat stat, std::span<const double> gold,
                 std::span<const double> pred) {
  return stat == CorrelationStat::Pearson ? pearson(pred, gold)
                                          : kendall_tau_like(gold, pred);
}

double mean(std::span<const double> values) {
  if (values.empty()) {
    throw std::invalid_argument("mean of empty vector");
  }
  double sum = 0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

double population_std(std::span<const double> values) {
  double m = mean(values);
  double ss = 0;
  for (double v : values) {
    ss += (v - m) * (v - m);
  }
  return std::sqrt(ss / static_cast<double>(values.size()));
}

double quantile_sorted(std::span<const double> sorted, double q) {
  if (sorted.empty()) {
    throw std::invalid_argument("quantile of empty vector");
  }
  if (sorted.size() == 1) {
    return sorted[0];
  }
  double pos = q * static_cast<double>(sorted.size() - 1);
  std::size_t lo = static_cast<std::size_t>(pos);
  if (lo + 1 >= sorted.size()) {
    return sorted.back();
  }
  double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

std::pair<double, double> bootstrap_ci(std::span<const double> gold,
                                       std::span<const double> pred,
                                       CorrelationStat stat,
                                       const BootstrapConfig& config) {
  if (gold.size() != pred.size()) {
    throw std::invalid_argument("bootstrap: length mismatch");
  }
  if (gold.size() < 3) {
    throw std::invalid_argument("bootstrap: need at least 3 pairs");
  }
  if (config.iters < 100) {
    throw std::invalid_argument("bootstrap: need at least 100 iterations");
  }
  if (!(config.level > 0 && config.level < 1)) {
    throw std::invalid_argument("bootstrap: level must be in (0, 1)");
  }
  std::size_t n = gold.size();
  // Index mapping uses raw engine output modulo n: mt19937_64 is fully
  // specified, so the stream is identical on every platform.
  std::mt19937_64 engine(config.seed);
  std::vector<double> replicates;
  replicates.reserve(config.iters);
  std::vector<double> g(n), p(n);
  std::size_t attempts = 0;
  const std::size_t max_attempts = 10 * config.iters;
  while (replicates.size() < config.iters) {
    if (attempts++ >= max_attempts) {
      throw std::invalid_argument(
          "bootstrap: redraw cap exceeded (statistic undefined on most "
          "resamples)");
    }
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t idx = static_cast<std::size_t>(engine() % n);
      g[i] = gold[idx];
      p[i] = pred[idx];
    }
    try {
      replicates.push_back(correlate(stat, g, p));
    } catch (const std::invalid_argument&) {
      continue;  // undefined on this resample; redraw
    }
  }
  std::sort(replicates.begin(), replicates.end());
  double tail = (1.0 - config.level) / 2.0;
  return {quantile_sorted(replicates, tail),
          quantile_sorted(replicates, 1.0 - tail)};
}

double krippendorff_alpha_interval(
    const std::vector<std::vector<std::optional<double>>>& ratings) {
  // Pairable values: units with at least two ratings.
  std::vector<double> pooled;
  double observed = 0.0;
  std::size_t pairable_units = 0;
  for (const auto& unit : ratings) {
    std::vector<double> values;
    for (const auto& v : unit) {
      if (v) {
        values.push_back(*v);
      }
    }
    if (values.size() < 2) {
      continue;
    }
    ++pairable_units;
    double m = static_cast<double>(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
      for (std::size_t j = 0; j < values.size(); ++j) {
        if (i == j) {
          continue;
        }
        double d = values[i] - values[j];
        observed += d * d / (m - 1.0);
      }
    }
    pooled.insert(pooled.end(), values.begin(), values.end());
  }
  if (pairable_units < 2) {
    throw std::invalid_argument(
        "krippendorff: need at least 2 units with 2+ ratings");
  }
  double n = static_cast<double>(pooled.size());
  double d_o = observed / n;
  double expected = 0.0;
  for (std::size_t i = 0; i < pooled.size(); ++i) {
    for (std::size_t j = 0; j < pooled.size(); ++j) {
      if (i == j) {
        continue;
      }
      double d = pooled[i] - pooled[j];
      expected += d * d;
    }
  }
  double d_e = expected / (n * (n - 1.0));
  if (d_e == 0) {
    throw std::invalid_argument("krippendorff: no value variation");
  }
  return 1.0 - d_o / d_e;
}

namespace {

struct GroupData {
  std::vector<double> gold;
  std::vector<double> pred;
};

CorrelationResult make_result(const std::string& group, CorrelationStat stat,
                              const GroupData& data,
                              const std::optional<BootstrapConfig>& bootstrap) {
  CorrelationResult result;
  result.statistic = stat;
  result.group = group;
  result.n = data.gold.size();
  result.r = correlate(stat, data.gold, data.pred);
  if (bootstrap) {
    result.ci = bootstrap_ci(data.gold, data.pred, stat, *bootstrap);
  }
  return result;
}

// Table-4 row order, then anything else alphabetically.
int group_rank(const std::string& group) {
  static const std::vector<std::string> order = {
      "Cochrane", "PNAS", "NIHR Series", "eLife",
      "PLOS Series", "Wiki", "MSD", "Other"};
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] == group) {
      return static_cast<int>(i);
    }
  }
  return static_cast<int>(order.size());
}

}  // namespace

GroupedCorrelations grouped_correlation(
    const std::map<std::string, double>& scores,
    const std::map<std::string, double>& gold, const Corpus& corpus,
    GroupBy group_by, CorrelationStat stat,
    const std::optional<BootstrapConfig>& bootstrap) {
  std::map<std::string, GroupData> groups;
  for (const AnnotatedSentence& s : corpus) {
    auto score_it = scores.find(s.id);
    auto gold_it = gold.find(s.id);
    if (score_it == scores.end() || gold_it == gold.end()) {
      continue;
    }
    std::string key =
        group_by == GroupBy::Source ? source_group(s.source) : "all";
    GroupData& data = groups[key];
    data.gold.push_back(gold_it->second);
    data.pred.push_back(score_it->second);
  }

  GroupedCorrelations out;
  std::vector<double> rs;
  for (const auto& [name, data] : groups) {
    if (data.gold.size() < 3) {
      out.skipped.push_back(name + ": fewer than 3 rated sentences");
      continue;
    }
    try {
      out.groups.push_back(make_result(name, stat, data, bootstrap));
      rs.push_back(out.groups.back().r);
    } catch (const std::invalid_argument& e) {
      out.skipped.push_back(name + ": " + e.what());
    }
  }
  std::sort(out.groups.begin(), out.groups.end(),
            [](const CorrelationResult& a, const CorrelationResult& b) {
              int ra = group_rank(a.group);
              int rb = group_rank(b.group);
              return ra != rb ? ra < rb : a.group < b.group;
            });
  if (!rs.empty()) {
    out.mean = mean(rs);
    out.stddev = population_std(rs);
  }
  return out;
}

LengthBucketedCorrelations length_bucketed_correlation(
    const std::map<std::string, double>& scores,
    const std::map<std::string, double>& gold, const Corpus& corpus,
    const std::vector<double>& boundaries, CorrelationStat stat,
    const std::optional<BootstrapConfig>& bootstrap) {
  for (std::size_t i = 1; i < boundaries.size(); ++i) {
    if (!(boundaries[i - 1] < boundaries[i])) {
      throw std::invalid_argument("bucket boundaries must strictly increase");
    }
  }
  auto bucket_label = [&](std::size_t b) {
    std::ostringstream label;
    if (boundaries.empty()) {
      label << "all";
    } else if (b == 0) {
      label << "<" << boundaries.front();
    } else if (b == boundaries.size()) {
      label << ">=" << boundaries.back();
    } else {
      label << "[" << boundaries[b - 1] << "," << boundaries[b] << ")";
    }
    return label.str();
  };

  std::vector<GroupData> buckets(boundaries.size() + 1);
  for (const AnnotatedSentence& s : corpus) {
    auto score_it = scores.find(s.id);
    auto gold_it = gold.find(s.id);
    if (score_it == scores.end() || gold_it == gold.end()) {
      continue;
    }
    std::size_t words = 0;
    for (const std::string& t : s.tokens) {
      if (is_word_token(t)) {
        ++words;
      }
    }
    std::size_t b = 0;
    while (b < boundaries.size() &&
           static_cast<double>(words) >= boundaries[b]) {
      ++b;
    }
    buckets[b].gold.push_back(gold_it->second);
    buckets[b].pred.push_back(score_it->second);
  }

  LengthBucketedCorrelations out;
  for (std::size_t b = 0; b < buckets.size(); ++b) {
    const GroupData& data = buckets[b];
    std::string label = bucket_label(b);
    if (data.gold.size() < 3) {
      out.skipped.push_back(label + ": fewer than 3 rated sentences");
      continue;
    }
    try {
      out.buckets.push_back(make_result(label, stat, data, bootstrap));
    } catch (const std::invalid_argument& e) {
      out.skipped.push_back(label + ": " + e.what());
    }
  }
  return out;
}

std::vector<FeatureCorrelation> feature_correlations(
    const std::map<std::string, std::map<std::string, double>>& features,
    const std::map<std::string, double>& gold) {
  std::map<std::string, GroupData> per_feature;
  for (const auto& [id, vector] : features) {
    auto gold_it = gold.find(id);
    if (gold_it == gold.end()) {
      continue;
    }
    for (const auto& [feature, value] : vector) {
      GroupData& data = per_feature[feature];
      data.pred.push_back(value);
      data.gold.push_back(gold_it->second);
    }
  }
  std::vector<FeatureCorrelation> out;
  for (const auto& [feature, data] : per_feature) {
    FeatureCorrelation fc;
    fc.feature = feature;
    fc.n = data.gold.size();
    try {
      fc.r = pearson(data.pred, data.gold);
    } catch (const std::invalid_argument&) {
      fc.defined = false;
      fc.r = std::numeric_limits<double>::quiet_NaN();
    }
    out.push_back(std::move(fc));
  }
  std::sort(out.begin(), out.end(),
            [](const FeatureCorrelation& a, const FeatureCorrelation& b) {
              if (a.defined != b.defined) {
                return a.defined > b.defined;
              }
              if (a.defined && a.r != b.r) {
                return a.r > b.r;
              }
              return a.feature < b.feature;
            });
  return out;
}

}  // namespace medread
