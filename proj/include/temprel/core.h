// temprel/core.h

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

#ifndef TEMPREL_CORE_H_
#define TEMPREL_CORE_H_

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace temprel {

// Errors. Everything the library throws derives from Error so callers (the
// CLI in particular) can map a data problem to exit status 1 in one place.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller broke a documented precondition.
class ContractError : public Error {
 public:
  using Error::Error;
};

// Input parsed but violates a type invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Input did not match the expected document schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

// Candidates and references could not be matched up by clip id.
class PairingError : public Error {
 public:
  using Error::Error;
};

/// Framewise per-class event probabilities for one clip. values is stored
/// row-major: frame t, class m lives at values[t * num_classes() + m].
class ProbabilityGrid {
 public:
  ProbabilityGrid(std::string clip_id, double frame_rate,
                  std::vector<std::string> class_labels,
                  std::vector<double> values);

  const std::string& clip_id() const { return clip_id_; }
  double frame_rate() const { return frame_rate_; }
  const std::vector<std::string>& class_labels() const { return class_labels_; }
  const std::vector<double>& values() const { return values_; }

  std::size_t num_frames() const { return values_.size() / class_labels_.size(); }
  std::size_t num_classes() const { return class_labels_.size(); }

  double at(std::size_t frame, std::size_t cls) const {
    return values_[frame * class_labels_.size() + cls];
  }

  bool operator==(const ProbabilityGrid&) const = default;

 private:
  std::string clip_id_;
  double frame_rate_;
  std::vector<std::string> class_labels_;
  std::vector<double> values_;
};

/// One detected event segment. Times are in seconds, offset exclusive.
struct EventInterval {
  std::string class_label;
  double onset = 0.0;
  double offset = 0.0;

  double duration() const { return offset - onset; }
  bool operator==(const EventInterval&) const = default;
};

// Throws ValidationError unless 0 <= onset < offset and both are finite.
void validate_interval(const EventInterval& ev);

enum class RelationLabel { kSequential, kSimultaneous };

std::string_view to_string(RelationLabel label);

/// Relation-complexity tag: 0 single event / no conjunction, 1 simultaneous,
/// 2 sequential, 3 more complex.
class TemporalTag {
 public:
  static constexpr int kMaxValue = 3;

  constexpr TemporalTag() = default;
  explicit TemporalTag(int value);

  constexpr int value() const { return value_; }
  auto operator<=>(const TemporalTag&) const = default;

 private:
  int value_ = 0;
};

struct ConjunctionLexicon {
  std::set<std::string> simultaneous_words;
  std::set<std::string> sequential_words;
  // Words that count for the binary temporal-description metric.
  std::set<std::string> metric_sequential_words;

  bool operator==(const ConjunctionLexicon&) const = default;
};

ConjunctionLexicon default_lexicon();

// Throws ValidationError if any lexicon invariant fails.
void validate_lexicon(const ConjunctionLexicon& lex);

// Parses a lexicon JSON document. Listed words are added to the defaults;
// an empty document (or an empty object) yields the default lexicon.
ConjunctionLexicon load_lexicon(std::string_view document);

ConjunctionLexicon load_lexicon_file(const std::string& path);

// Serializes to the same JSON schema load_lexicon accepts.
std::string serialize_lexicon(const ConjunctionLexicon& lex);

struct CaptionRecord {
  std::string clip_id;
  std::string text;

  bool operator==(const CaptionRecord&) const = default;
};

void validate_caption(const CaptionRecord& rec);

struct ReferenceSet {
  std::string clip_id;
  std::vector<std::string> references;

  bool operator==(const ReferenceSet&) const = default;
};

void validate_references(const ReferenceSet& refs);

}  // namespace temprel

#endif  // TEMPREL_CORE_H_
