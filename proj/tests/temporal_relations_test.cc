// tests/temporal_relations_test.cc
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

#include <gtest/gtest.h>

#include <random>

#include "oracles.h"
#include "temprel/temporal_relations.h"

namespace temprel {
namespace {

constexpr auto kSeq = RelationLabel::kSequential;
constexpr auto kSim = RelationLabel::kSimultaneous;

EventInterval ev(const std::string& label, double on, double off) {
  return {label, on, off};
}

TEST(PairRelation, HalfDurationBoundaryIsSimultaneous) {
  EXPECT_EQ(pair_relation(ev("a", 0, 4), ev("b", 3, 5)), kSim);
  EXPECT_EQ(pair_relation(ev("b", 3, 5), ev("a", 0, 4)), kSim);
}

TEST(PairRelation, ContainedAndDisjoint) {
  EXPECT_EQ(pair_relation(ev("a", 0, 4), ev("b", 1, 3)), kSim);
  EXPECT_EQ(pair_relation(ev("a", 0, 2), ev("b", 5, 7)), kSeq);
  // Just under half.
  EXPECT_EQ(pair_relation(ev("a", 0, 4), ev("b", 3.01, 5)), kSeq);
}

TEST(PairRelation, DecimalBoundaryIsNotFlippedByRounding) {
  // overlap 0.1 and duration 0.2, none of which are exact in binary.
  EXPECT_EQ(pair_relation(ev("a", 0.3, 0.7), ev("b", 0.6, 0.8)), kSim);
  EXPECT_EQ(pair_relation(ev("a", 12.1, 12.5), ev("b", 12.4, 12.6)), kSim);
}

TEST(PairRelation, EqualOnsetsAreSimultaneous) {
  EXPECT_EQ(pair_relation(ev("a", 1, 2), ev("b", 1, 9)), kSim);
  EXPECT_EQ(pair_relation(ev("a", 1, 9), ev("b", 1, 2)), kSim);
}

TEST(PairRelation, SameClassIsContractViolation) {
  EXPECT_THROW(pair_relation(ev("a", 0, 1), ev("a", 2, 3)), ContractError);
}

TEST(PairRelation, MatchesRasterOracle) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::int64_t> pt(0, 3000);
  for (int i = 0; i < 3000; ++i) {
    std::int64_t a0 = pt(rng), a1 = pt(rng), b0 = pt(rng), b1 = pt(rng);
    if (a0 == a1 || b0 == b1) continue;
    if (a0 > a1) std::swap(a0, a1);
    if (b0 > b1) std::swap(b0, b1);
    const auto expected = testing::raster_relation(a0, a1, b0, b1);
    ASSERT_EQ(pair_relation(ev("a", a0 / 1000.0, a1 / 1000.0),
                            ev("b", b0 / 1000.0, b1 / 1000.0)),
              expected)
        << a0 << " " << a1 << " " << b0 << " " << b1;
  }
}

TEST(PairRelation, InvariantUnderTranslationAndScaling) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::int64_t> pt(0, 2000);
  const double scales[] = {0.5, 2.0, 3.0, 10.0, 0.001};
  for (int i = 0; i < 2000; ++i) {
    std::int64_t a0 = pt(rng), a1 = pt(rng), b0 = pt(rng), b1 = pt(rng);
    if (a0 == a1 || b0 == b1) continue;
    if (a0 > a1) std::swap(a0, a1);
    if (b0 > b1) std::swap(b0, b1);
    auto a = ev("a", a0 / 1000.0, a1 / 1000.0);
    auto b = ev("b", b0 / 1000.0, b1 / 1000.0);
    const auto base = pair_relation(a, b);
    EXPECT_EQ(pair_relation(b, a), base);
    const double shift = static_cast<double>(pt(rng)) / 100.0;
    EXPECT_EQ(pair_relation(ev("a", a.onset + shift, a.offset + shift),
                            ev("b", b.onset + shift, b.offset + shift)),
              base);
    for (double s : scales)
      EXPECT_EQ(pair_relation(ev("a", a.onset * s, a.offset * s),
                              ev("b", b.onset * s, b.offset * s)),
                base);
  }
}

TEST(ClipRelations, EdgeCases) {
  const auto empty = clip_relations({});
  EXPECT_TRUE(empty.relations.empty());
  EXPECT_EQ(empty.distinct_class_count, 0u);

  const std::vector<EventInterval> same = {ev("dog", 0, 1), ev("dog", 3, 4)};
  const auto one = clip_relations(same);
  EXPECT_TRUE(one.relations.empty());
  EXPECT_EQ(one.distinct_class_count, 1u);
  EXPECT_EQ(infer_audio_tag(one).value(), 0);
}

TEST(ClipRelations, ThreeDisjointClasses) {
  const std::vector<EventInterval> events = {ev("x", 0, 1), ev("y", 2, 3),
                                             ev("z", 4, 5)};
  const auto rel = clip_relations(events);
  EXPECT_EQ(rel.distinct_class_count, 3u);
  EXPECT_EQ(rel.relations, (std::vector<RelationLabel>{kSeq, kSeq, kSeq}));
  EXPECT_EQ(infer_audio_tag(rel).value(), 2);
}

TEST(ClipRelations, MatchesPairEnumeration) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> label(0, 3), pt(0, 100);
  for (int i = 0; i < 200; ++i) {
    std::vector<EventInterval> events;
    const int n = i % 7;
    for (int k = 0; k < n; ++k) {
      int s = pt(rng), e = pt(rng);
      if (s == e) ++e;
      if (s > e) std::swap(s, e);
      events.push_back(ev("c" + std::to_string(label(rng)), s, e));
    }
    std::size_t seq = 0, sim = 0;
    for (std::size_t p = 0; p < events.size(); ++p)
      for (std::size_t q = 0; q < events.size(); ++q) {
        if (p >= q || events[p].class_label == events[q].class_label) continue;
        const auto r = testing::raster_relation(
            static_cast<std::int64_t>(events[p].onset),
            static_cast<std::int64_t>(events[p].offset),
            static_cast<std::int64_t>(events[q].onset),
            static_cast<std::int64_t>(events[q].offset));
        (r == kSeq ? seq : sim)++;
      }
    const auto rel = clip_relations(events);
    EXPECT_EQ(static_cast<std::size_t>(std::count(rel.relations.begin(),
                                                  rel.relations.end(), kSeq)),
              seq);
    EXPECT_EQ(rel.relations.size(), seq + sim);
  }
}

TEST(InferAudioTag, TableRows) {
  EXPECT_EQ(infer_audio_tag({{}, 1}).value(), 0);
  EXPECT_EQ(infer_audio_tag({{}, 0}).value(), 0);
  EXPECT_EQ(infer_audio_tag({{kSim, kSim}, 2}).value(), 1);
  EXPECT_EQ(infer_audio_tag({{kSeq}, 2}).value(), 2);
  EXPECT_EQ(infer_audio_tag({{kSeq, kSim}, 3}).value(), 3);
  EXPECT_THROW(infer_audio_tag({{}, 2}), ContractError);
}

TEST(InferAudioTag, ExhaustiveUpToSix) {
  for (int n = 1; n <= 6; ++n) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      RelationSet rel;
      rel.distinct_class_count = 2;
      int seq = 0;
      for (int i = 0; i < n; ++i) {
        const bool is_seq = mask >> i & 1u;
        rel.relations.push_back(is_seq ? kSeq : kSim);
        seq += is_seq;
      }
      const int expected = seq == 0 ? 1 : seq == n ? 2 : 3;
      EXPECT_EQ(infer_audio_tag(rel).value(), expected);
    }
  }
}

}  // namespace
}  // namespace temprel
