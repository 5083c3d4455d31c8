#include "medread/spaneval.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "medread/error.hpp"

namespace medread {

namespace {

void check_spans(const std::vector<ComplexSpan>& spans, std::size_t n_tokens,
                 const char* what) {
  std::size_t prev_end = 0;
  for (const ComplexSpan& s : spans) {
    if (s.start >= s.end || s.end > n_tokens) {
      throw std::invalid_argument(std::string(what) + ": span out of bounds");
    }
    if (s.start < prev_end) {
      throw std::invalid_argument(std::string(what) +
                                  ": spans overlap or are unsorted");
    }
    prev_end = s.end;
  }
}

// Collapsed label index per granularity; -1 marks an unlabeled token.
int label_index(SpanCategory category, Granularity g) {
  switch (g) {
    case Granularity::Binary:
      return 0;
    case Granularity::SevenCategory:
      return static_cast<int>(category);
    case Granularity::ThreeClass:
      switch (category) {
        case SpanCategory::GoogleEasy:
        case SpanCategory::GoogleHard:
        case SpanCategory::MedicalNameEntity:
          return 0;
        case SpanCategory::GeneralComplex:
        case SpanCategory::MultiSense:
          return 1;
        default:
          return 2;
      }
  }
  return 0;
}

std::vector<int> token_labels(const std::vector<ComplexSpan>& spans,
                              std::size_t n_tokens, Granularity g) {
  std::vector<int> labels(n_tokens, -1);
  for (const ComplexSpan& s : spans) {
    int label = label_index(s.category, g);
    for (std::size_t i = s.start; i < s.end; ++i) {
      labels[i] = label;
    }
  }
  return labels;
}

}  // namespace

std::string_view to_string(MatchMode m) {
  switch (m) {
    case MatchMode::Token:
      return "token";
    case MatchMode::Partial:
      return "partial";
    default:
      return "exact";
  }
}

MatchMode match_mode_from_string(std::string_view s) {
  if (s == "token") return MatchMode::Token;
  if (s == "partial") return MatchMode::Partial;
  if (s == "exact") return MatchMode::Exact;
  throw ParseError("unknown match mode: '" + std::string(s) + "'");
}

PRF finalize(const MatchCounts& counts) {
  PRF prf;
  prf.tp = counts.tp;
  prf.fp = counts.fp;
  prf.fn = counts.fn;
  if (counts.tp + counts.fp > 0) {
    prf.precision = static_cast<double>(counts.tp) /
                    static_cast<double>(counts.tp + counts.fp);
  }
  if (counts.tp + counts.fn > 0) {
    prf.recall = static_cast<double>(counts.tp) /
                 static_cast<double>(counts.tp + counts.fn);
  }
  if (prf.precision + prf.recall > 0) {
    prf.f1 = 2.0 * prf.precision * prf.recall / (prf.precision + prf.recall);
  }
  return prf;
}

MatchCounts token_match_counts(const std::vector<ComplexSpan>& gold,
                               const std::vector<ComplexSpan>& pred,
                               std::size_t n_tokens, Granularity g) {
  check_spans(gold, n_tokens, "gold");
  check_spans(pred, n_tokens, "pred");
  std::vector<int> gold_labels = token_labels(gold, n_tokens, g);
  std::vector<int> pred_labels = token_labels(pred, n_tokens, g);
  MatchCounts counts;
  for (std::size_t i = 0; i < n_tokens; ++i) {
    int gl = gold_labels[i];
    int pl = pred_labels[i];
    if (pl >= 0 && pl == gl) {
      ++counts.tp;
    } else {
      if (pl >= 0) {
        ++counts.fp;
      }
      if (gl >= 0) {
        ++counts.fn;
      }
    }
  }
  return counts;
}

MatchCounts entity_partial_counts(const std::vector<ComplexSpan>& gold,
                                  const std::vector<ComplexSpan>& pred,
                                  Granularity g) {
  std::size_t bound = 0;
  for (const ComplexSpan& s : gold) bound = std::max(bound, s.end);
  for (const ComplexSpan& s : pred) bound = std::max(bound, s.end);
  check_spans(gold, bound, "gold");
  check_spans(pred, bound, "pred");

  std::vector<bool> pred_used(pred.size(), false);
  MatchCounts counts;
  for (const ComplexSpan& gs : gold) {
    bool matched = false;
    for (std::size_t p = 0; p < pred.size(); ++p) {
      if (pred_used[p]) {
        continue;
      }
      const ComplexSpan& ps = pred[p];
      if (ps.start >= gs.end) {
        break;  // both lists sorted by start
      }
      if (ps.end <= gs.start) {
        continue;
      }
      if (label_index(ps.category, g) != label_index(gs.category, g)) {
        continue;
      }
      pred_used[p] = true;
      matched = true;
      break;
    }
    if (matched) {
      ++counts.tp;
    } else {
      ++counts.fn;
    }
  }
  for (bool used : pred_used) {
    if (!used) {
      ++counts.fp;
    }
  }
  return counts;
}

MatchCounts entity_exact_counts(const std::vector<ComplexSpan>& gold,
                                const std::vector<ComplexSpan>& pred,
                                Granularity g) {
  std::size_t bound = 0;
  for (const ComplexSpan& s : gold) bound = std::max(bound, s.end);
  for (const ComplexSpan& s : pred) bound = std::max(bound, s.end);
  check_spans(gold, bound, "gold");
  check_spans(pred, bound, "pred");

  std::map<std::tuple<std::size_t, std::size_t, int>, std::size_t> available;
  for (const ComplexSpan& gs : gold) {
    available[{gs.start, gs.end, label_index(gs.category, g)}] += 1;
  }
  MatchCounts counts;
  for (const ComplexSpan& ps : pred) {
    auto it = available.find({ps.start, ps.end, label_index(ps.category, g)});
    if (it != available.end() && it->second > 0) {
      --it->second;
      ++counts.tp;
    } else {
      ++counts.fp;
    }
  }
  counts.fn = gold.size() - counts.tp;
  return counts;
}

PRF token_f1(const std::vector<ComplexSpan>& gold,
             const std::vector<ComplexSpan>& pred, std::size_t n_tokens,
             Granularity g) {
  return finalize(token_match_counts(gold, pred, n_tokens, g));
}

PRF entity_partial_f1(const std::vector<ComplexSpan>& gold,
                      const std::vector<ComplexSpan>& pred, Granularity g) {
  return finalize(entity_partial_counts(gold, pred, g));
}

PRF entity_exact_f1(const std::vector<ComplexSpan>& gold,
                    const std::vector<ComplexSpan>& pred, Granularity g) {
  return finalize(entity_exact_counts(gold, pred, g));
}

PRF evaluate_spans(const Corpus& corpus,
                   const std::map<std::string, std::vector<ComplexSpan>>& pred,
                   Granularity g, MatchMode mode) {
  static const std::vector<ComplexSpan> kEmpty;
  MatchCounts total;
  for (const AnnotatedSentence& s : corpus) {
    auto it = pred.find(s.id);
    const std::vector<ComplexSpan>& p = it != pred.end() ? it->second : kEmpty;
    switch (mode) {
      case MatchMode::Token:
        total += token_match_counts(s.spans, p, s.tokens.size(), g);
        break;
      case MatchMode::Partial:
        total += entity_partial_counts(s.spans, p, g);
        break;
      case MatchMode::Exact:
        total += entity_exact_counts(s.spans, p, g);
        break;
    }
  }
  return finalize(total);
}

double cohen_kappa_tokens(const std::vector<std::vector<std::string>>& a,
                          const std::vector<std::vector<std::string>>& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("kappa: corpus size mismatch");
  }
  std::unordered_map<std::string, std::size_t> counts_a, counts_b;
  std::size_t agree = 0;
  std::size_t total = 0;
  for (std::size_t s = 0; s < a.size(); ++s) {
    if (a[s].size() != b[s].size()) {
      throw std::invalid_argument("kappa: sentence " + std::to_string(s) +
                                  " label length mismatch");
    }
    for (std::size_t i = 0; i < a[s].size(); ++i) {
      ++counts_a[a[s][i]];
      ++counts_b[b[s][i]];
      if (a[s][i] == b[s][i]) {
        ++agree;
      }
      ++total;
    }
  }
  if (total == 0) {
    throw std::invalid_argument("kappa: empty label streams");
  }
  double n = static_cast<double>(total);
  double p_o = static_cast<double>(agree) / n;
  double p_e = 0.0;
  for (const auto& [label, count_a] : counts_a) {
    auto it = counts_b.find(label);
    if (it != counts_b.end()) {
      p_e += (static_cast<double>(count_a) / n) *
             (static_cast<double>(it->second) / n);
    }
  }
  if (p_e >= 1.0) {
    throw std::invalid_argument(
        "kappa: degenerate single-label marginals (expected agreement 1)");
  }
  return (p_o - p_e) / (1.0 - p_e);
}

}  // namespace medread
