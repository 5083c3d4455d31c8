#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "medread/corpus.hpp"
#include "medread/jargon.hpp"

namespace medread {

enum class MatchMode { Token, Partial, Exact };

std::string_view to_string(MatchMode m);
MatchMode match_mode_from_string(std::string_view s);

struct MatchCounts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;

  MatchCounts& operator+=(const MatchCounts& other) {
    tp += other.tp;
    fp += other.fp;
    fn += other.fn;
    return *this;
  }
};

struct PRF {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  double precision = 0.0;  // 0 when tp+fp == 0
  double recall = 0.0;     // 0 when tp+fn == 0
  double f1 = 0.0;         // harmonic mean, 0 when p+r == 0
};

PRF finalize(const MatchCounts& counts);

// Per-token collapsed-label comparison. A token labeled differently in
// gold and prediction counts as both fp and fn.
MatchCounts token_match_counts(const std::vector<ComplexSpan>& gold,
                               const std::vector<ComplexSpan>& pred,
                               std::size_t n_tokens, Granularity g);

// One-to-one matching in order of increasing gold start; a prediction
// matches when collapsed types are equal and ranges overlap by >= 1 token.
MatchCounts entity_partial_counts(const std::vector<ComplexSpan>& gold,
                                  const std::vector<ComplexSpan>& pred,
                                  Granularity g);

// One-to-one matching on exact (start, end, collapsed type).
MatchCounts entity_exact_counts(const std::vector<ComplexSpan>& gold,
                                const std::vector<ComplexSpan>& pred,
                                Granularity g);

PRF token_f1(const std::vector<ComplexSpan>& gold,
             const std::vector<ComplexSpan>& pred, std::size_t n_tokens,
             Granularity g);
PRF entity_partial_f1(const std::vector<ComplexSpan>& gold,
                      const std::vector<ComplexSpan>& pred, Granularity g);
PRF entity_exact_f1(const std::vector<ComplexSpan>& gold,
                    const std::vector<ComplexSpan>& pred, Granularity g);

// Micro aggregation over a corpus: per-sentence counts are summed.
// Sentences without an entry in predictions count as empty predictions.
PRF evaluate_spans(const Corpus& corpus,
                   const std::map<std::string, std::vector<ComplexSpan>>& pred,
                   Granularity g, MatchMode mode);

// Token-level Cohen's kappa over two parallel label-sequence streams;
// expected agreement from per-annotator marginals.
double cohen_kappa_tokens(const std::vector<std::vector<std::string>>& a,
                          const std::vector<std::vector<std::string>>& b);

}  // namespace medread
