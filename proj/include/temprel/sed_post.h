// temprel/sed_post.h

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

#ifndef TEMPREL_SED_POST_H_
#define TEMPREL_SED_POST_H_

#include <cstddef>
#include <vector>

#include "temprel/core.h"

namespace temprel {

struct ThresholdConfig {
  double low = 0.25;
  double high = 0.75;
  // Optional smoothing before thresholding; 1 disables it. Must be odd.
  std::size_t median_window = 1;
  // Intervals shorter than this many frames are dropped; 0 disables it.
  std::size_t min_duration_frames = 0;
};

// Throws ContractError unless 0 <= low <= high <= 1 and median_window is odd.
void validate_thresholds(const ThresholdConfig& cfg);

/// Hysteresis segmentation. For each class, every maximal run of frames with
/// probability >= low that holds at least one frame >= high becomes an
/// interval [first / frame_rate, (last + 1) / frame_rate). Output is sorted by
/// (class_label, onset).
std::vector<EventInterval> double_threshold(const ProbabilityGrid& grid,
                                            const ThresholdConfig& cfg = {});

/// Max-pools the time axis down to target_len frames. Output frame t covers
/// input frames [floor(t*T/target_len), floor((t+1)*T/target_len)).
ProbabilityGrid pool_align(const ProbabilityGrid& grid, std::size_t target_len);

}  // namespace temprel

#endif  // TEMPREL_SED_POST_H_
