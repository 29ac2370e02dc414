// src/core.cc

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

#include "temprel/core.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "json.hpp"

namespace temprel {

ProbabilityGrid::ProbabilityGrid(std::string clip_id, double frame_rate,
                                 std::vector<std::string> class_labels,
                                 std::vector<double> values)
    : clip_id_(std::move(clip_id)),
      frame_rate_(frame_rate),
      class_labels_(std::move(class_labels)),
      values_(std::move(values)) {
  if (!(std::isfinite(frame_rate_) && frame_rate_ > 0.0))
    throw ValidationError("clip " + clip_id_ + ": frame_rate must be positive");
  if (class_labels_.empty())
    throw ValidationError("clip " + clip_id_ + ": no class labels");
  std::unordered_set<std::string> seen;
  for (const auto& label : class_labels_) {
    if (!seen.insert(label).second)
      throw ValidationError("clip " + clip_id_ + ": duplicate class label '" +
                            label + "'");
  }
  if (values_.empty() || values_.size() % class_labels_.size() != 0)
    throw ValidationError("clip " + clip_id_ +
                          ": values do not form a T x M grid with T >= 1");
  for (double v : values_) {
    if (!(v >= 0.0 && v <= 1.0)) {
      std::ostringstream os;
      os << "clip " << clip_id_ << ": probability " << v
         << " outside [0, 1]";
      throw ValidationError(os.str());
    }
  }
}

void validate_interval(const EventInterval& ev) {
  if (!std::isfinite(ev.onset) || !std::isfinite(ev.offset) ||
      ev.onset < 0.0 || !(ev.onset < ev.offset)) {
    std::ostringstream os;
    os << "event '" << ev.class_label << "': invalid interval [" << ev.onset
       << ", " << ev.offset << ")";
    throw ValidationError(os.str());
  }
}

std::string_view to_string(RelationLabel label) {
  return label == RelationLabel::kSequential ? "sequential" : "simultaneous";
}

TemporalTag::TemporalTag(int value) : value_(value) {
  if (value < 0 || value > kMaxValue)
    throw ValidationError("temporal tag " + std::to_string(value) +
                          " outside {0,1,2,3}");
}

ConjunctionLexicon default_lexicon() {
  ConjunctionLexicon lex;
  lex.simultaneous_words = {"while", "and",     "as",           "with",
                            "when",  "meanwhile", "simultaneously"};
  lex.sequential_words = {"follow", "follows", "followed",   "following",
                          "then",   "after",   "afterwards", "before"};
  lex.metric_sequential_words = {"follow", "followed", "then", "after"};
  return lex;
}

namespace {

void check_words(const std::set<std::string>& words, std::string_view field) {
  for (const auto& w : words) {
    bool ok = !w.empty();
    for (unsigned char c : w) {
      if (std::isspace(c) || std::isupper(c)) ok = false;
    }
    if (!ok)
      throw ValidationError("lexicon field '" + std::string(field) +
                            "': invalid entry '" + w +
                            "' (must be nonempty, lowercase, no whitespace)");
  }
}

void merge_field(const nlohmann::json& doc, const char* key,
                 std::set<std::string>& into) {
  auto it = doc.find(key);
  if (it == doc.end()) return;
  if (!it->is_array())
    throw SchemaError(std::string("lexicon field '") + key +
                      "' must be an array of strings");
  for (const auto& item : *it) {
    if (!item.is_string())
      throw SchemaError(std::string("lexicon field '") + key +
                        "' must be an array of strings");
    into.insert(item.get<std::string>());
  }
}

}  // namespace

void validate_lexicon(const ConjunctionLexicon& lex) {
  check_words(lex.simultaneous_words, "simultaneous");
  check_words(lex.sequential_words, "sequential");
  check_words(lex.metric_sequential_words, "metric_sequential");
  for (const auto& w : lex.simultaneous_words) {
    if (lex.sequential_words.count(w))
      throw ValidationError("lexicon word '" + w +
                            "' is both simultaneous and sequential");
  }
}

ConjunctionLexicon load_lexicon(std::string_view document) {
  ConjunctionLexicon lex = default_lexicon();
  bool blank = std::all_of(document.begin(), document.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c));
  });
  if (blank) return lex;

  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("lexicon is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("lexicon must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "simultaneous" && key != "sequential" &&
        key != "metric_sequential")
      throw SchemaError("lexicon field '" + key + "' is not recognized");
  }
  merge_field(doc, "simultaneous", lex.simultaneous_words);
  merge_field(doc, "sequential", lex.sequential_words);
  merge_field(doc, "metric_sequential", lex.metric_sequential_words);
  validate_lexicon(lex);
  return lex;
}

ConjunctionLexicon load_lexicon_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open lexicon file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_lexicon(buf.str());
}

std::string serialize_lexicon(const ConjunctionLexicon& lex) {
  nlohmann::ordered_json doc;
  doc["simultaneous"] = lex.simultaneous_words;
  doc["sequential"] = lex.sequential_words;
  doc["metric_sequential"] = lex.metric_sequential_words;
  return doc.dump();
}

void validate_caption(const CaptionRecord& rec) {
  bool blank = std::all_of(rec.text.begin(), rec.text.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c));
  });
  if (blank) throw ValidationError("clip " + rec.clip_id + ": empty caption");
}

void validate_references(const ReferenceSet& refs) {
  if (refs.references.empty())
    throw ValidationError("clip " + refs.clip_id + ": no reference captions");
  for (const auto& r : refs.references)
    validate_caption(CaptionRecord{refs.clip_id, r});
}

}  // namespace temprel
