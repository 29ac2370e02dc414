// src/sed_post.cc

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

#include "temprel/sed_post.h"

#include <algorithm>
#include <tuple>

namespace temprel {

void validate_thresholds(const ThresholdConfig& cfg) {
  if (!(cfg.low >= 0.0 && cfg.low <= cfg.high && cfg.high <= 1.0))
    throw ContractError("thresholds must satisfy 0 <= low <= high <= 1");
  if (cfg.median_window == 0 || cfg.median_window % 2 == 0)
    throw ContractError("median_window must be a positive odd number");
}

namespace {

// Running median with edge replication, window of odd size k.
std::vector<double> median_filter(const std::vector<double>& x, std::size_t k) {
  if (k <= 1 || x.empty()) return x;
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(x.size());
  const std::ptrdiff_t half = static_cast<std::ptrdiff_t>(k / 2);
  std::vector<double> out(x.size()), window(k);
  for (std::ptrdiff_t t = 0; t < n; ++t) {
    for (std::ptrdiff_t j = -half; j <= half; ++j)
      window[j + half] = x[std::clamp<std::ptrdiff_t>(t + j, 0, n - 1)];
    std::nth_element(window.begin(), window.begin() + half, window.end());
    out[t] = window[half];
  }
  return out;
}

}  // namespace

std::vector<EventInterval> double_threshold(const ProbabilityGrid& grid,
                                            const ThresholdConfig& cfg) {
  validate_thresholds(cfg);
  const std::size_t num_frames = grid.num_frames();
  std::vector<EventInterval> events;
  std::vector<double> column(num_frames);

  for (std::size_t m = 0; m < grid.num_classes(); ++m) {
    for (std::size_t t = 0; t < num_frames; ++t) column[t] = grid.at(t, m);
    const std::vector<double> track = median_filter(column, cfg.median_window);

    std::size_t t = 0;
    while (t < num_frames) {
      if (track[t] < cfg.low) {
        ++t;
        continue;
      }
      std::size_t start = t;
      bool has_high = false;
      for (; t < num_frames && track[t] >= cfg.low; ++t)
        has_high = has_high || track[t] >= cfg.high;
      if (!has_high) continue;
      if (cfg.min_duration_frames > 0 && t - start < cfg.min_duration_frames)
        continue;
      events.push_back({grid.class_labels()[m],
                        static_cast<double>(start) / grid.frame_rate(),
                        static_cast<double>(t) / grid.frame_rate()});
    }
  }
  std::sort(events.begin(), events.end(),
            [](const EventInterval& a, const EventInterval& b) {
              return std::tie(a.class_label, a.onset) <
                     std::tie(b.class_label, b.onset);
            });
  return events;
}

ProbabilityGrid pool_align(const ProbabilityGrid& grid, std::size_t target_len) {
  const std::size_t in_len = grid.num_frames();
  const std::size_t num_classes = grid.num_classes();
  if (target_len == 0 || target_len > in_len)
    throw ContractError("pool_align: target length " +
                        std::to_string(target_len) + " not in [1, " +
                        std::to_string(in_len) + "]");
  if (target_len == in_len) return grid;

  std::vector<double> pooled(target_len * num_classes, 0.0);
  for (std::size_t t = 0; t < target_len; ++t) {
    const std::size_t begin = t * in_len / target_len;
    const std::size_t end = (t + 1) * in_len / target_len;
    for (std::size_t m = 0; m < num_classes; ++m) {
      double best = grid.at(begin, m);
      for (std::size_t s = begin + 1; s < end; ++s)
        best = std::max(best, grid.at(s, m));
      pooled[t * num_classes + m] = best;
    }
  }
  const double rate = grid.frame_rate() * static_cast<double>(target_len) /
                      static_cast<double>(in_len);
  return ProbabilityGrid(grid.clip_id(), rate, grid.class_labels(),
                         std::move(pooled));
}

}  // namespace temprel
