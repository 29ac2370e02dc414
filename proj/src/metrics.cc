// src/metrics.cc

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

#include "temprel/metrics.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <map>
#include <string>

#include "temprel/caption_tag.h"

namespace temprel {

namespace {

constexpr int kMaxOrder = 4;
constexpr double kRougeBeta = 1.2;

using Tokens = std::vector<std::string>;
using NgramCounts = std::map<std::vector<std::string>, std::size_t>;

void check_pairing(std::span<const CaptionRecord> candidates,
                   std::span<const ReferenceSet> refs) {
  if (candidates.size() != refs.size())
    throw PairingError("got " + std::to_string(candidates.size()) +
                       " candidates but " + std::to_string(refs.size()) +
                       " reference sets");
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (candidates[i].clip_id != refs[i].clip_id)
      throw PairingError("candidate " + candidates[i].clip_id +
                         " paired with references for " + refs[i].clip_id);
    if (refs[i].references.empty())
      throw PairingError("clip " + refs[i].clip_id + " has no references");
  }
}

NgramCounts count_ngrams(const Tokens& toks, std::size_t n) {
  NgramCounts counts;
  if (toks.size() < n) return counts;
  for (std::size_t i = 0; i + n <= toks.size(); ++i)
    ++counts[Tokens(toks.begin() + i, toks.begin() + i + n)];
  return counts;
}

}  // namespace

TemporalLabel temporal_labels(const CaptionRecord& candidate,
                              const ReferenceSet& refs,
                              const ConjunctionLexicon& lex) {
  if (candidate.clip_id != refs.clip_id)
    throw PairingError("candidate " + candidate.clip_id +
                       " paired with references for " + refs.clip_id);
  TemporalLabel out;
  out.pred = has_sequential_cw(tokenize(candidate.text), lex);
  for (const auto& r : refs.references)
    out.label = out.label || has_sequential_cw(tokenize(r), lex);
  return out;
}

TemporalScores acc_f1_temp(std::span<const TemporalLabel> pairs) {
  if (pairs.empty()) throw ContractError("acc_f1_temp: no pairs");
  TemporalScores s;
  for (const auto& p : pairs) {
    if (p.pred && p.label) ++s.counts.tp;
    else if (p.pred) ++s.counts.fp;
    else if (p.label) ++s.counts.fn;
    else ++s.counts.tn;
  }
  const auto& c = s.counts;
  s.acc = static_cast<double>(c.tp + c.tn) / static_cast<double>(pairs.size());
  const std::size_t denom = 2 * c.tp + c.fp + c.fn;
  s.f1 = denom == 0 ? 1.0
                    : static_cast<double>(2 * c.tp) / static_cast<double>(denom);
  return s;
}

double bleu4(std::span<const CaptionRecord> candidates,
             std::span<const ReferenceSet> refs) {
  check_pairing(candidates, refs);
  std::array<std::size_t, kMaxOrder> matched{}, total{};
  std::size_t cand_len = 0, ref_len = 0;

  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const Tokens cand = tokenize(candidates[i].text).tokens;
    std::vector<Tokens> ref_toks;
    for (const auto& r : refs[i].references)
      ref_toks.push_back(tokenize(r).tokens);

    // Closest reference length, shorter one on ties.
    std::size_t best = ref_toks.front().size();
    for (const auto& r : ref_toks) {
      const auto d = [&](std::size_t len) {
        return len > cand.size() ? len - cand.size() : cand.size() - len;
      };
      if (d(r.size()) < d(best) || (d(r.size()) == d(best) && r.size() < best))
        best = r.size();
    }
    cand_len += cand.size();
    ref_len += best;

    for (int n = 1; n <= kMaxOrder; ++n) {
      NgramCounts max_ref;
      for (const auto& r : ref_toks)
        for (const auto& [gram, cnt] : count_ngrams(r, n))
          max_ref[gram] = std::max(max_ref[gram], cnt);
      for (const auto& [gram, cnt] : count_ngrams(cand, n)) {
        total[n - 1] += cnt;
        auto it = max_ref.find(gram);
        if (it != max_ref.end()) matched[n - 1] += std::min(cnt, it->second);
      }
    }
  }

  if (cand_len == 0) return 0.0;
  double log_sum = 0.0;
  int orders = 0;
  for (int n = 0; n < kMaxOrder; ++n) {
    if (total[n] == 0) continue;
    if (matched[n] == 0) return 0.0;
    log_sum += std::log(static_cast<double>(matched[n]) /
                        static_cast<double>(total[n]));
    ++orders;
  }
  double bp = 1.0;
  if (cand_len < ref_len)
    bp = std::exp(1.0 - static_cast<double>(ref_len) /
                            static_cast<double>(cand_len));
  return bp * std::exp(log_sum / orders);
}

std::size_t lcs_length(std::span<const std::string> a,
                       std::span<const std::string> b) {
  std::vector<std::size_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1
                                    : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

double rouge_l(std::span<const CaptionRecord> candidates,
               std::span<const ReferenceSet> refs) {
  check_pairing(candidates, refs);
  if (candidates.empty()) return 0.0;
  std::vector<double> scores(candidates.size(), 0.0);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const Tokens cand = tokenize(candidates[i].text).tokens;
    double prec = 0.0, rec = 0.0;
    for (const auto& r : refs[i].references) {
      const Tokens ref = tokenize(r).tokens;
      const auto lcs = static_cast<double>(lcs_length(cand, ref));
      if (!cand.empty()) prec = std::max(prec, lcs / cand.size());
      if (!ref.empty()) rec = std::max(rec, lcs / ref.size());
    }
    if (prec > 0.0 && rec > 0.0) {
      const double b2 = kRougeBeta * kRougeBeta;
      scores[i] = (1.0 + b2) * prec * rec / (rec + b2 * prec);
    }
  }
  // Summing in sorted order makes the mean independent of clip order.
  std::sort(scores.begin(), scores.end());
  double sum = 0.0;
  for (double v : scores) sum += v;
  return sum / static_cast<double>(candidates.size());
}

}  // namespace temprel
