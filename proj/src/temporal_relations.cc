// src/temporal_relations.cc

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

#include "temprel/temporal_relations.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace temprel {

namespace {

constexpr double kRelativeTolerance = 1e-9;

}  // namespace

RelationLabel pair_relation(const EventInterval& a, const EventInterval& b) {
  if (a.class_label == b.class_label)
    throw ContractError("pair_relation: both events have class '" +
                        a.class_label + "'");
  const bool a_first =
      a.onset < b.onset || (a.onset == b.onset && a.offset <= b.offset);
  const EventInterval& first = a_first ? a : b;
  const EventInterval& second = a_first ? b : a;

  const double overlap = first.offset - second.onset;
  const double duration = std::min(first.duration(), second.duration());
  const double scale = std::max({std::abs(first.onset), std::abs(first.offset),
                                 std::abs(second.onset),
                                 std::abs(second.offset), 1e-3});
  // overlap < duration / 2, decided away from the rounding noise at equality.
  const double margin = duration - 2.0 * overlap;
  return margin > kRelativeTolerance * scale ? RelationLabel::kSequential
                                             : RelationLabel::kSimultaneous;
}

RelationSet clip_relations(std::span<const EventInterval> events) {
  RelationSet out;
  std::set<std::string> classes;
  for (const auto& ev : events) classes.insert(ev.class_label);
  out.distinct_class_count = classes.size();
  for (std::size_t i = 0; i < events.size(); ++i) {
    for (std::size_t j = i + 1; j < events.size(); ++j) {
      if (events[i].class_label == events[j].class_label) continue;
      out.relations.push_back(pair_relation(events[i], events[j]));
    }
  }
  return out;
}

TemporalTag infer_audio_tag(const RelationSet& rel) {
  if (rel.distinct_class_count < 2) return TemporalTag(0);
  if (rel.relations.empty())
    throw ContractError(
        "infer_audio_tag: two or more classes but no relations");
  const bool any_seq =
      std::find(rel.relations.begin(), rel.relations.end(),
                RelationLabel::kSequential) != rel.relations.end();
  const bool any_sim =
      std::find(rel.relations.begin(), rel.relations.end(),
                RelationLabel::kSimultaneous) != rel.relations.end();
  if (any_seq && any_sim) return TemporalTag(3);
  return TemporalTag(any_seq ? 2 : 1);
}

}  // namespace temprel
