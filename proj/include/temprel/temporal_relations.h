// temprel/temporal_relations.h

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

#ifndef TEMPREL_TEMPORAL_RELATIONS_H_
#define TEMPREL_TEMPORAL_RELATIONS_H_

#include <cstddef>
#include <span>
#include <vector>

#include "temprel/core.h"

namespace temprel {

struct RelationSet {
  std::vector<RelationLabel> relations;
  std::size_t distinct_class_count = 0;
};

/// Relation between two events of different classes. With A the event that
/// starts first (ties broken by earlier offset), overlap = A_off - B_on and
/// duration = the shorter event's length; the pair is sequential iff
/// overlap < duration / 2. Argument order does not matter.
///
/// Endpoints are compared with a tolerance of 1e-9 relative to the largest
/// endpoint magnitude, so an overlap of exactly half the duration stays
/// simultaneous even after decimal-to-binary rounding.
RelationLabel pair_relation(const EventInterval& a, const EventInterval& b);

/// Relations over every unordered pair of events with different labels.
RelationSet clip_relations(std::span<const EventInterval> events);

/// 0 when fewer than two distinct classes; 1 all simultaneous; 2 all
/// sequential; 3 mixed.
TemporalTag infer_audio_tag(const RelationSet& rel);

}  // namespace temprel

#endif  // TEMPREL_TEMPORAL_RELATIONS_H_
