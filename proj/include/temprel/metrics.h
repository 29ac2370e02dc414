// temprel/metrics.h

// Copyright 2026  The temprel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef TEMPREL_METRICS_H_
#define TEMPREL_METRICS_H_

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "temprel/core.h"

namespace temprel {

struct ConfusionCounts {
  std::size_t tp = 0, fp = 0, fn = 0, tn = 0;

  std::size_t total() const { return tp + fp + fn + tn; }
  bool operator==(const ConfusionCounts&) const = default;
};

// Metrics that were not requested stay empty.
struct EvalReport {
  std::size_t n_clips = 0;
  std::optional<double> acc_temp;
  std::optional<double> f1_temp;
  std::optional<double> bleu4;
  std::optional<double> rouge_l;
  std::optional<ConfusionCounts> counts;
};

struct TemporalLabel {
  bool pred = false;
  bool label = false;

  bool operator==(const TemporalLabel&) const = default;
};

// pred: the candidate has a sequential conjunction; label: any reference has
// one. Throws PairingError when the clip ids differ.
TemporalLabel temporal_labels(const CaptionRecord& candidate,
                              const ReferenceSet& refs,
                              const ConjunctionLexicon& lex);

struct TemporalScores {
  double acc = 0.0;
  // 1.0 when there are no positives at all (tp = fp = fn = 0).
  double f1 = 0.0;
  ConfusionCounts counts;
};

TemporalScores acc_f1_temp(std::span<const TemporalLabel> pairs);

/// Corpus BLEU-4 over tokenized captions: clipped n-gram precisions for
/// n = 1..4, uniform geometric mean and brevity penalty against the closest
/// reference length. Orders for which the candidate corpus has no n-grams at
/// all are left out of the mean; any order with candidate n-grams but no
/// match makes the score 0. refs[i] must belong to candidates[i].
double bleu4(std::span<const CaptionRecord> candidates,
             std::span<const ReferenceSet> refs);

/// Mean over clips of the LCS F-measure (beta = 1.2), with precision and
/// recall each maximized over the clip's references.
double rouge_l(std::span<const CaptionRecord> candidates,
               std::span<const ReferenceSet> refs);

// Length of the longest common subsequence of two token lists.
std::size_t lcs_length(std::span<const std::string> a,
                       std::span<const std::string> b);

}  // namespace temprel

#endif  // TEMPREL_METRICS_H_
