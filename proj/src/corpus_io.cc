// src/corpus_io.cc

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

#include "temprel/corpus_io.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace temprel {

namespace {

using nlohmann::json;

std::string at_line(std::size_t line_no) {
  return "line " + std::to_string(line_no) + ": ";
}

bool is_blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c));
  });
}

// Next nonblank line parsed as a JSON object.
bool next_record(std::istream& in, std::size_t& line_no, json& out) {
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line)) continue;
    try {
      out = json::parse(line);
    } catch (const json::parse_error& e) {
      throw SchemaError(at_line(line_no) + "malformed JSON: " + e.what());
    }
    if (!out.is_object())
      throw SchemaError(at_line(line_no) + "record is not a JSON object");
    return true;
  }
  return false;
}

const json& field(const json& rec, const char* key, std::size_t line_no) {
  auto it = rec.find(key);
  if (it == rec.end())
    throw SchemaError(at_line(line_no) + "missing field '" + key + "'");
  return *it;
}

std::string string_field(const json& rec, const char* key,
                         std::size_t line_no) {
  const json& v = field(rec, key, line_no);
  if (!v.is_string())
    throw SchemaError(at_line(line_no) + "field '" + key +
                      "' must be a string");
  return v.get<std::string>();
}

std::vector<std::string> string_array_field(const json& rec, const char* key,
                                            std::size_t line_no,
                                            const std::string& clip) {
  const json& v = field(rec, key, line_no);
  if (!v.is_array())
    throw SchemaError(at_line(line_no) + "clip " + clip + ": field '" + key +
                      "' must be an array of strings");
  std::vector<std::string> out;
  for (const auto& item : v) {
    if (!item.is_string())
      throw SchemaError(at_line(line_no) + "clip " + clip + ": field '" + key +
                        "' must be an array of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

// Re-throws validation failures with the line number in front.
template <typename F>
auto with_line(std::size_t line_no, F&& f) {
  try {
    return f();
  } catch (const ValidationError& e) {
    throw ValidationError(at_line(line_no) + e.what());
  }
}

std::optional<double> parse_number(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
    return std::nullopt;
  return v;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

}  // namespace

std::optional<ProbabilityGrid> GridReader::next() {
  json rec;
  if (!next_record(in_, line_no_, rec)) return std::nullopt;
  const std::size_t line_no = line_no_;
  const std::string clip = string_field(rec, "clip_id", line_no);
  const json& rate = field(rec, "frame_rate", line_no);
  if (!rate.is_number())
    throw SchemaError(at_line(line_no) + "clip " + clip +
                      ": frame_rate must be a number");
  auto classes = string_array_field(rec, "classes", line_no, clip);
  const json& probs = field(rec, "probs", line_no);
  if (!probs.is_array())
    throw SchemaError(at_line(line_no) + "clip " + clip +
                      ": probs must be an array of rows");
  std::vector<double> values;
  values.reserve(probs.size() * classes.size());
  for (std::size_t t = 0; t < probs.size(); ++t) {
    const json& row = probs[t];
    if (!row.is_array() || row.size() != classes.size())
      throw SchemaError(at_line(line_no) + "clip " + clip + ": probs row " +
                        std::to_string(t) + " must hold " +
                        std::to_string(classes.size()) + " numbers");
    for (const auto& v : row) {
      if (!v.is_number())
        throw SchemaError(at_line(line_no) + "clip " + clip + ": probs row " +
                          std::to_string(t) + " has a non-number");
      values.push_back(v.get<double>());
    }
  }
  return with_line(line_no, [&] {
    return ProbabilityGrid(clip, rate.get<double>(), std::move(classes),
                           std::move(values));
  });
}

std::vector<ProbabilityGrid> parse_prob_grids(std::istream& in) {
  std::vector<ProbabilityGrid> grids;
  GridReader reader(in);
  while (auto g = reader.next()) grids.push_back(std::move(*g));
  return grids;
}

std::string write_prob_grid(const ProbabilityGrid& grid) {
  json probs = json::array();
  for (std::size_t t = 0; t < grid.num_frames(); ++t) {
    json row = json::array();
    for (std::size_t m = 0; m < grid.num_classes(); ++m)
      row.push_back(grid.at(t, m));
    probs.push_back(std::move(row));
  }
  nlohmann::ordered_json rec;
  rec["clip_id"] = grid.clip_id();
  rec["frame_rate"] = grid.frame_rate();
  rec["classes"] = grid.class_labels();
  rec["probs"] = std::move(probs);
  return rec.dump() + "\n";
}

EventMap parse_strong_tsv(std::istream& in) {
  EventMap events;
  std::string line;
  std::size_t row = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_blank(line)) continue;
    auto cols = split_tabs(line);
    const bool was_first = first;
    first = false;
    if (was_first && cols.size() >= 2 && !parse_number(cols[1])) continue;
    if (cols.size() != 4)
      throw SchemaError("row " + std::to_string(row) +
                        ": expected 4 tab-separated fields, got " +
                        std::to_string(cols.size()));
    const std::string clip(cols[0]);
    auto onset = parse_number(cols[1]);
    auto offset = parse_number(cols[2]);
    if (!onset || !offset)
      throw SchemaError("row " + std::to_string(row) + ": clip " + clip +
                        ": non-numeric onset/offset");
    EventInterval ev{std::string(cols[3]), *onset, *offset};
    try {
      validate_interval(ev);
    } catch (const ValidationError& e) {
      throw ValidationError("row " + std::to_string(row) + ": clip " + clip +
                            ": " + e.what());
    }
    events[clip].push_back(std::move(ev));
  }
  return events;
}

std::string write_strong_tsv(const EventMap& events) {
  std::ostringstream os;
  os.precision(17);
  for (const auto& [clip, evs] : events)
    for (const auto& ev : evs)
      os << clip << '\t' << ev.onset << '\t' << ev.offset << '\t'
         << ev.class_label << '\n';
  return os.str();
}

std::vector<CaptionRecord> parse_candidates(std::istream& in) {
  std::vector<CaptionRecord> out;
  json rec;
  std::size_t line_no = 0;
  while (next_record(in, line_no, rec)) {
    CaptionRecord c{string_field(rec, "clip_id", line_no),
                    string_field(rec, "caption", line_no)};
    with_line(line_no, [&] { validate_caption(c); });
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<ReferenceSet> parse_references(std::istream& in) {
  std::vector<ReferenceSet> out;
  json rec;
  std::size_t line_no = 0;
  while (next_record(in, line_no, rec)) {
    ReferenceSet r;
    r.clip_id = string_field(rec, "clip_id", line_no);
    r.references = string_array_field(rec, "captions", line_no, r.clip_id);
    with_line(line_no, [&] { validate_references(r); });
    out.push_back(std::move(r));
  }
  return out;
}

std::string write_candidate(const CaptionRecord& rec) {
  nlohmann::ordered_json j;
  j["clip_id"] = rec.clip_id;
  j["caption"] = rec.text;
  return j.dump() + "\n";
}

std::string write_references(const ReferenceSet& refs) {
  nlohmann::ordered_json j;
  j["clip_id"] = refs.clip_id;
  j["captions"] = refs.references;
  return j.dump() + "\n";
}

std::string_view to_string(TagSource source) {
  return source == TagSource::kAudio ? "audio" : "text";
}

TagSource parse_tag_source(std::string_view name) {
  if (name == "audio") return TagSource::kAudio;
  if (name == "text") return TagSource::kText;
  throw SchemaError("unknown tag source '" + std::string(name) + "'");
}

std::vector<TagRecord> parse_tags(std::istream& in) {
  std::vector<TagRecord> out;
  json rec;
  std::size_t line_no = 0;
  while (next_record(in, line_no, rec)) {
    TagRecord t;
    t.clip_id = string_field(rec, "clip_id", line_no);
    const json& tag = field(rec, "tag", line_no);
    if (!tag.is_number_integer())
      throw SchemaError(at_line(line_no) + "clip " + t.clip_id +
                        ": tag must be an integer");
    t.tag = with_line(line_no, [&] { return TemporalTag(tag.get<int>()); });
    try {
      t.source = parse_tag_source(string_field(rec, "source", line_no));
    } catch (const SchemaError& e) {
      throw SchemaError(at_line(line_no) + "clip " + t.clip_id + ": " +
                        e.what());
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::string write_tag(const TagRecord& rec) {
  nlohmann::ordered_json j;
  j["clip_id"] = rec.clip_id;
  j["tag"] = rec.tag.value();
  j["source"] = to_string(rec.source);
  return j.dump() + "\n";
}

std::string write_tags(std::span<const TagRecord> tags) {
  std::string out;
  for (const auto& t : tags) out += write_tag(t);
  return out;
}

TagDistribution tag_distribution(std::span<const TagRecord> tags) {
  TagDistribution dist;
  for (const auto& t : tags) ++dist.counts[t.tag.value()];
  dist.total = tags.size();
  return dist;
}

namespace {

nlohmann::ordered_json distribution_json(const TagDistribution& dist) {
  nlohmann::ordered_json counts;
  for (std::size_t k = 0; k < dist.counts.size(); ++k)
    counts[std::to_string(k)] = dist.counts[k];
  nlohmann::ordered_json j;
  j["counts"] = std::move(counts);
  j["total"] = dist.total;
  return j;
}

}  // namespace

std::string write_distribution(const TagDistribution& dist) {
  return distribution_json(dist).dump() + "\n";
}

std::string prompt_token(TemporalTag tag) {
  return "<TAG_" + std::to_string(tag.value()) + ">";
}

std::string emit_prompts(std::span<const TagRecord> tags) {
  std::vector<const TagRecord*> sorted;
  for (const auto& t : tags) sorted.push_back(&t);
  std::sort(sorted.begin(), sorted.end(),
            [](const TagRecord* a, const TagRecord* b) {
              return a->clip_id < b->clip_id;
            });
  std::string out;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i > 0 && sorted[i]->clip_id == sorted[i - 1]->clip_id)
      throw ValidationError("duplicate clip_id " + sorted[i]->clip_id +
                            " in tag input");
    nlohmann::ordered_json j;
    j["clip_id"] = sorted[i]->clip_id;
    j["prompt_token"] = prompt_token(sorted[i]->tag);
    out += j.dump() + "\n";
  }
  return out;
}

std::vector<PromptRecord> parse_prompts(std::istream& in) {
  std::vector<PromptRecord> out;
  json rec;
  std::size_t line_no = 0;
  while (next_record(in, line_no, rec)) {
    PromptRecord p;
    p.clip_id = string_field(rec, "clip_id", line_no);
    const std::string token = string_field(rec, "prompt_token", line_no);
    if (token.size() != 7 || token.rfind("<TAG_", 0) != 0 ||
        token.back() != '>' || token[5] < '0' || token[5] > '3')
      throw SchemaError(at_line(line_no) + "clip " + p.clip_id +
                        ": bad prompt token '" + token + "'");
    p.tag = TemporalTag(token[5] - '0');
    out.push_back(std::move(p));
  }
  return out;
}

std::string write_report(const EvalReport& report,
                         const std::optional<TagDistribution>& dist) {
  nlohmann::ordered_json j;
  j["n_clips"] = report.n_clips;
  if (report.acc_temp) j["acc_temp"] = *report.acc_temp;
  if (report.f1_temp) j["f1_temp"] = *report.f1_temp;
  if (report.bleu4) j["bleu4"] = *report.bleu4;
  if (report.rouge_l) j["rouge_l"] = *report.rouge_l;
  if (report.counts) {
    j["confusion"] = {{"tp", report.counts->tp},
                      {"fp", report.counts->fp},
                      {"fn", report.counts->fn},
                      {"tn", report.counts->tn}};
  }
  if (dist) j["tag_distribution"] = distribution_json(*dist);
  return j.dump(2) + "\n";
}

}  // namespace temprel
