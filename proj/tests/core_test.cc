// tests/core_test.cc
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

#include "temprel/core.h"

namespace temprel {
namespace {

TEST(Lexicon, EmptyDocumentGivesDefaults) {
  const ConjunctionLexicon lex = load_lexicon("");
  EXPECT_EQ(lex, default_lexicon());
  EXPECT_EQ(lex.metric_sequential_words,
            (std::set<std::string>{"follow", "followed", "then", "after"}));
  EXPECT_EQ(load_lexicon("{}"), default_lexicon());
}

TEST(Lexicon, DefaultsSatisfyInvariants) {
  EXPECT_NO_THROW(validate_lexicon(default_lexicon()));
  const auto lex = default_lexicon();
  for (const auto& w : lex.metric_sequential_words)
    EXPECT_TRUE(lex.sequential_words.count(w)) << w;
}

TEST(Lexicon, AddedWordsUnionWithDefaults) {
  const auto lex = load_lexicon(R"({"simultaneous": ["whilst"]})");
  auto expected = default_lexicon().simultaneous_words;
  expected.insert("whilst");
  EXPECT_EQ(lex.simultaneous_words, expected);
  EXPECT_EQ(lex.sequential_words, default_lexicon().sequential_words);
}

TEST(Lexicon, OverlapIsValidationError) {
  EXPECT_THROW(
      load_lexicon(R"({"simultaneous": ["then"], "sequential": ["then"]})"),
      ValidationError);
}

TEST(Lexicon, SchemaErrorsNameTheField) {
  try {
    load_lexicon(R"({"sequential": "then"})");
    FAIL();
  } catch (const SchemaError& e) {
    EXPECT_NE(std::string(e.what()).find("sequential"), std::string::npos);
  }
  try {
    load_lexicon(R"({"metric_sequential": [1, 2]})");
    FAIL();
  } catch (const SchemaError& e) {
    EXPECT_NE(std::string(e.what()).find("metric_sequential"), std::string::npos);
  }
  try {
    load_lexicon(R"({"sequentail": []})");
    FAIL();
  } catch (const SchemaError& e) {
    EXPECT_NE(std::string(e.what()).find("sequentail"), std::string::npos);
  }
  EXPECT_THROW(load_lexicon("[1,2]"), SchemaError);
  EXPECT_THROW(load_lexicon("{not json"), SchemaError);
}

TEST(Lexicon, RejectsBadEntries) {
  EXPECT_THROW(load_lexicon(R"({"sequential": ["Then"]})"), ValidationError);
  EXPECT_THROW(load_lexicon(R"({"sequential": ["followed by"]})"), ValidationError);
  EXPECT_THROW(load_lexicon(R"({"sequential": [""]})"), ValidationError);
}

TEST(Lexicon, RoundTripIsStable) {
  const auto lex = load_lexicon(
      R"({"simultaneous": ["whilst"], "sequential": ["subsequently"],
          "metric_sequential": ["subsequently"]})");
  const auto again = load_lexicon(serialize_lexicon(lex));
  EXPECT_EQ(again, lex);
  EXPECT_EQ(serialize_lexicon(again), serialize_lexicon(lex));
}

TEST(ProbabilityGrid, ValidatesInvariants) {
  EXPECT_NO_THROW(ProbabilityGrid("a", 10.0, {"x"}, {0.0, 1.0}));
  EXPECT_THROW(ProbabilityGrid("a", 10.0, {"x"}, {1.5}), ValidationError);
  EXPECT_THROW(ProbabilityGrid("a", 10.0, {"x"}, {-0.1}), ValidationError);
  EXPECT_THROW(ProbabilityGrid("a", 0.0, {"x"}, {0.5}), ValidationError);
  EXPECT_THROW(ProbabilityGrid("a", 10.0, {}, {}), ValidationError);
  EXPECT_THROW(ProbabilityGrid("a", 10.0, {"x"}, {}), ValidationError);
  EXPECT_THROW(ProbabilityGrid("a", 10.0, {"x", "x"}, {0.1, 0.2}),
               ValidationError);
  EXPECT_THROW(ProbabilityGrid("a", 10.0, {"x", "y"}, {0.1, 0.2, 0.3}),
               ValidationError);
  ProbabilityGrid g("a", 2.0, {"x", "y"}, {0.1, 0.2, 0.3, 0.4});
  EXPECT_EQ(g.num_frames(), 2u);
  EXPECT_EQ(g.at(1, 0), 0.3);
}

TEST(TemporalTag, RangeChecked) {
  for (int v = 0; v <= 3; ++v) EXPECT_EQ(TemporalTag(v).value(), v);
  EXPECT_THROW(TemporalTag(4), ValidationError);
  EXPECT_THROW(TemporalTag(-1), ValidationError);
}

TEST(EventInterval, RequiresPositiveDuration) {
  EXPECT_NO_THROW(validate_interval({"dog", 0.0, 0.5}));
  EXPECT_THROW(validate_interval({"dog", 1.0, 1.0}), ValidationError);
  EXPECT_THROW(validate_interval({"dog", 2.0, 1.0}), ValidationError);
  EXPECT_THROW(validate_interval({"dog", -1.0, 1.0}), ValidationError);
}

TEST(Captions, Validation) {
  EXPECT_THROW(validate_caption({"a", "  \t"}), ValidationError);
  EXPECT_THROW(validate_references({"a", {}}), ValidationError);
  EXPECT_NO_THROW(validate_references({"a", {"x", "y"}}));
}

}  // namespace
}  // namespace temprel
