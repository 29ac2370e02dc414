// temprel/corpus_io.h

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

#ifndef TEMPREL_CORPUS_IO_H_
#define TEMPREL_CORPUS_IO_H_

#include <array>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "temprel/core.h"
#include "temprel/metrics.h"

namespace temprel {

// All readers below consume "\n"-terminated UTF-8 text. Blank lines are
// skipped but still counted, so error messages carry the physical line number.

/// Streaming reader for probability grid records:
///   {"clip_id": str, "frame_rate": number, "classes": [str...],
///    "probs": [[number...]...]}
/// with probs shaped frames x classes.
class GridReader {
 public:
  explicit GridReader(std::istream& in) : in_(in) {}

  // Empty at end of stream.
  std::optional<ProbabilityGrid> next();

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
};

std::vector<ProbabilityGrid> parse_prob_grids(std::istream& in);
std::string write_prob_grid(const ProbabilityGrid& grid);

using EventMap = std::map<std::string, std::vector<EventInterval>>;

// clip_id <TAB> onset <TAB> offset <TAB> label rows. A first row whose onset
// field is not numeric is treated as a header and skipped.
EventMap parse_strong_tsv(std::istream& in);
std::string write_strong_tsv(const EventMap& events);

// {"clip_id": str, "caption": str}
std::vector<CaptionRecord> parse_candidates(std::istream& in);
// {"clip_id": str, "captions": [str...]}
std::vector<ReferenceSet> parse_references(std::istream& in);

std::string write_candidate(const CaptionRecord& rec);
std::string write_references(const ReferenceSet& refs);

enum class TagSource { kAudio, kText };

std::string_view to_string(TagSource source);
TagSource parse_tag_source(std::string_view name);

struct TagRecord {
  std::string clip_id;
  TemporalTag tag;
  TagSource source = TagSource::kAudio;

  bool operator==(const TagRecord&) const = default;
};

// {"clip_id": str, "tag": 0..3, "source": "audio"|"text"}
std::vector<TagRecord> parse_tags(std::istream& in);
std::string write_tag(const TagRecord& rec);
std::string write_tags(std::span<const TagRecord> tags);

struct TagDistribution {
  std::array<std::size_t, TemporalTag::kMaxValue + 1> counts{};
  std::size_t total = 0;

  bool operator==(const TagDistribution&) const = default;
};

TagDistribution tag_distribution(std::span<const TagRecord> tags);

// {"counts": {"0": n, "1": n, "2": n, "3": n}, "total": n}
std::string write_distribution(const TagDistribution& dist);

struct PromptRecord {
  std::string clip_id;
  TemporalTag tag;

  bool operator==(const PromptRecord&) const = default;
};

std::string prompt_token(TemporalTag tag);

// One {"clip_id", "prompt_token"} line per clip, sorted by clip_id, where the
// token is "<TAG_k>". Throws ValidationError on a repeated clip_id.
std::string emit_prompts(std::span<const TagRecord> tags);
std::vector<PromptRecord> parse_prompts(std::istream& in);

// Report document; unselected metrics (and the confusion block when neither
// temporal metric was computed) are left out.
std::string write_report(const EvalReport& report,
                         const std::optional<TagDistribution>& dist);

}  // namespace temprel

#endif  // TEMPREL_CORPUS_IO_H_
