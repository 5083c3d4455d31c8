#include "medread/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "medread/error.hpp"
#include "medread/io.hpp"
#include "medread/stats.hpp"

namespace medread {

namespace {

struct MetricName {
  Metric metric;
  const char* name;
};

constexpr MetricName kMetricNames[] = {
    {Metric::Length, "length"},      {Metric::Fkgl, "fkgl"},
    {Metric::Ari, "ari"},            {Metric::Smog, "smog"},
    {Metric::Rsrs, "rsrs"},          {Metric::FkglJar, "fkgl-jar"},
    {Metric::AriJar, "ari-jar"},     {Metric::SmogJar, "smog-jar"},
    {Metric::RsrsJar, "rsrs-jar"},
};

void require_words(const SentenceStats& stats) {
  if (stats.n_words == 0) {
    throw std::invalid_argument("zero words");
  }
}

}  // namespace

std::string_view to_string(Metric m) {
  for (const MetricName& entry : kMetricNames) {
    if (entry.metric == m) {
      return entry.name;
    }
  }
  return "length";
}

Metric metric_from_string(std::string_view s) {
  for (const MetricName& entry : kMetricNames) {
    if (s == entry.name) {
      return entry.metric;
    }
  }
  throw ParseError("unknown metric: '" + std::string(s) + "'");
}

bool is_jar_metric(Metric m) {
  return m == Metric::FkglJar || m == Metric::AriJar || m == Metric::SmogJar ||
         m == Metric::RsrsJar;
}

Metric jar_of(Metric base) {
  switch (base) {
    case Metric::Fkgl:
      return Metric::FkglJar;
    case Metric::Ari:
      return Metric::AriJar;
    case Metric::Smog:
      return Metric::SmogJar;
    case Metric::Rsrs:
      return Metric::RsrsJar;
    default:
      throw std::invalid_argument("metric has no -Jar variant");
  }
}

Metric base_of(Metric jar) {
  switch (jar) {
    case Metric::FkglJar:
      return Metric::Fkgl;
    case Metric::AriJar:
      return Metric::Ari;
    case Metric::SmogJar:
      return Metric::Smog;
    case Metric::RsrsJar:
      return Metric::Rsrs;
    default:
      throw std::invalid_argument("not a -Jar metric");
  }
}

MetricScore fkgl(const SentenceStats& stats) {
  require_words(stats);
  double words = static_cast<double>(stats.n_words);
  double syllables = static_cast<double>(stats.n_syllables);
  MetricScore score;
  score.metric = Metric::Fkgl;
  score.value = 0.39 * words + 11.8 * (syllables / words) - 15.59;
  score.components = {
      {"words", words}, {"syllables", syllables}, {"sentences", 1.0}};
  return score;
}

MetricScore ari(const SentenceStats& stats) {
  require_words(stats);
  double words = static_cast<double>(stats.n_words);
  double chars = static_cast<double>(stats.n_chars);
  MetricScore score;
  score.metric = Metric::Ari;
  score.value = 4.71 * (chars / words) + 0.5 * words - 21.43;
  score.components = {{"words", words}, {"chars", chars}, {"sentences", 1.0}};
  return score;
}

MetricScore smog(const SentenceStats& stats) {
  require_words(stats);
  double poly = static_cast<double>(stats.n_polysyllables);
  MetricScore score;
  score.metric = Metric::Smog;
  score.value = 1.0430 * std::sqrt(poly * 30.0) + 3.1291;
  score.components = {{"polysyllables", poly}, {"sentences", 1.0}};
  return score;
}

MetricScore length_baseline(const SentenceStats& stats) {
  MetricScore score;
  score.metric = Metric::Length;
  score.value = static_cast<double>(stats.n_words);
  score.components = {{"words", static_cast<double>(stats.n_words)}};
  return score;
}

MetricScore rsrs(const std::vector<std::string>& tokens,
                 const SurprisalProvider& provider) {
  std::vector<Surprisal> losses;
  for (const std::string& token : tokens) {
    if (!is_word_token(token)) {
      continue;
    }
    Surprisal s = provider.lookup(token);
    if (!std::isfinite(s.wnll) || s.wnll < 0) {
      throw std::invalid_argument("provider returned bad WNLL for '" + token +
                                  "'");
    }
    losses.push_back(s);
  }
  if (losses.empty()) {
    throw std::invalid_argument("zero words");
  }
  // Ties sort in-vocabulary first so rank weighting is reproducible.
  std::sort(losses.begin(), losses.end(), [](const Surprisal& a,
                                             const Surprisal& b) {
    if (a.wnll != b.wnll) {
      return a.wnll < b.wnll;
    }
    return a.oov < b.oov;
  });
  double sum = 0.0;
  std::size_t n_oov = 0;
  for (std::size_t i = 0; i < losses.size(); ++i) {
    double rank = static_cast<double>(i + 1);
    double weight = losses[i].oov ? rank : std::sqrt(rank);
    if (losses[i].oov) {
      ++n_oov;
    }
    sum += weight * losses[i].wnll;
  }
  MetricScore score;
  score.metric = Metric::Rsrs;
  score.value = sum / static_cast<double>(losses.size());
  score.components = {{"words", static_cast<double>(losses.size())},
                      {"oov_words", static_cast<double>(n_oov)}};
  return score;
}

UnigramSurprisal::UnigramSurprisal(
    std::unordered_map<std::string, std::uint64_t> counts) {
  double total = 0.0;
  for (const auto& [word, count] : counts) {
    total += static_cast<double>(count);
  }
  double denom = total + static_cast<double>(counts.size());
  if (denom <= 0) {
    throw std::invalid_argument("empty frequency table");
  }
  double log_denom = std::log(denom);
  for (const auto& [word, count] : counts) {
    wnll_[word] = log_denom - std::log(static_cast<double>(count) + 1.0);
  }
  oov_wnll_ = log_denom;  // -log(1 / (N + V))
}

UnigramSurprisal UnigramSurprisal::from_tsv(
    const std::filesystem::path& path) {
  std::unordered_map<std::string, std::uint64_t> counts;
  for (const auto& [word, count] : read_tsv_pairs(path)) {
    counts[fold_case(word)] += parse_count(count, "frequency count");
  }
  return UnigramSurprisal(std::move(counts));
}

Surprisal UnigramSurprisal::lookup(std::string_view word) const {
  auto it = wnll_.find(fold_case(word));
  if (it == wnll_.end()) {
    return {oov_wnll_, true};
  }
  return {it->second, false};
}

MetricScore jar_variant(const MetricScore& base, std::size_t jargon_spans,
                        double alpha) {
  if (alpha < 0 || !std::isfinite(alpha)) {
    throw std::invalid_argument("alpha must be a finite non-negative value");
  }
  double scale = base.metric == Metric::Rsrs ? kRsrsJarScale : 1.0;
  MetricScore score;
  score.metric = jar_of(base.metric);  // rejects non-base metrics
  score.value = scale * base.value + alpha * static_cast<double>(jargon_spans);
  score.components = base.components;
  score.components["base_value"] = base.value;
  score.components["scale"] = scale;
  score.components["alpha"] = alpha;
  score.components["jargon_spans"] = static_cast<double>(jargon_spans);
  return score;
}

AlphaResult tune_alpha(Metric base_metric, const std::vector<DevPoint>& dev,
                       const AlphaGrid& grid) {
  if (dev.size() < 3) {
    throw std::invalid_argument("need at least 3 dev points");
  }
  if (!(grid.step > 0) || grid.hi < grid.lo) {
    throw std::invalid_argument("degenerate alpha grid");
  }
  double scale = base_metric == Metric::Rsrs ? kRsrsJarScale : 1.0;

  std::vector<double> gold, base, count;
  gold.reserve(dev.size());
  base.reserve(dev.size());
  count.reserve(dev.size());
  for (const DevPoint& p : dev) {
    gold.push_back(p.gold);
    base.push_back(scale * p.base_value);
    count.push_back(static_cast<double>(p.jargon_spans));
  }
  bool gold_constant =
      std::all_of(gold.begin(), gold.end(),
                  [&](double v) { return v == gold.front(); });
  if (gold_constant) {
    throw std::invalid_argument("gold ratings are constant");
  }

  std::size_t steps =
      static_cast<std::size_t>(std::floor((grid.hi - grid.lo) / grid.step +
                                          1e-9));
  AlphaResult best;
  bool have_best = false;
  std::vector<double> combined(dev.size());
  for (std::size_t k = 0; k <= steps; ++k) {
    double alpha = grid.lo + static_cast<double>(k) * grid.step;
    for (std::size_t i = 0; i < dev.size(); ++i) {
      combined[i] = base[i] + alpha * count[i];
    }
    double r;
    try {
      r = pearson(combined, gold);
    } catch (const std::invalid_argument&) {
      continue;  // combined vector constant at this alpha
    }
    if (!have_best || r > best.pearson) {
      best = {alpha, r};
      have_best = true;
    }
  }
  if (!have_best) {
    throw std::invalid_argument("correlation undefined on the whole grid");
  }
  return best;
}

std::map<Metric, double> load_alpha_tsv(const std::filesystem::path& path) {
  std::map<Metric, double> out;
  for (const auto& [metric, alpha] : read_tsv_pairs(path)) {
    out[metric_from_string(metric)] = parse_double(alpha, "alpha");
  }
  return out;
}

void save_alpha_tsv(const std::map<Metric, double>& alphas,
                    const std::filesystem::path& path) {
  std::string out;
  for (const auto& [metric, alpha] : alphas) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%s\t%.4f\n",
                  std::string(to_string(metric)).c_str(), alpha);
    out += buf;
  }
  write_file_atomic(path, out);
}

}  // namespace medread
