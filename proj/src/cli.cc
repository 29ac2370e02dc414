// src/cli.cc

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

#include "temprel/cli.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "temprel/caption_tag.h"
#include "temprel/core.h"
#include "temprel/corpus_io.h"
#include "temprel/metrics.h"
#include "temprel/sed_post.h"
#include "temprel/temporal_relations.h"

namespace temprel {

namespace {

const std::vector<std::string> kAllMetrics = {"acc_temp", "f1_temp", "bleu4",
                                              "rouge_l"};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string lexicon_path;
  std::string out_path;
  int jobs = 1;

  // tag-audio
  std::string probs_path;
  std::string events_path;
  ThresholdConfig thresholds;
  std::size_t pool_len = 0;

  // tag-caption
  std::string captions_path;

  // prompts, stats
  std::string tags_path;
  std::string source;

  // evaluate
  std::string candidates_path;
  std::string references_path;
  std::string metrics = "acc_temp,f1_temp,bleu4,rouge_l";
};

// Runs fn(i) for i in [0, n) on up to `jobs` threads. Results land in their
// input slot, so the caller sees input order whatever the completion order.
template <typename T, typename F>
std::vector<T> parallel_map(std::size_t n, int jobs, F fn) {
  std::vector<std::optional<T>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads =
      std::min<std::size_t>(std::max(jobs, 1), std::max<std::size_t>(n, 1));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  // Report the first failure in input order.
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<T> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  return in;
}

ConjunctionLexicon resolve_lexicon(const RunConfig& cfg) {
  std::string path = cfg.lexicon_path;
  if (path.empty()) {
    if (const char* env = std::getenv("TEMPREL_LEXICON")) path = env;
  }
  return path.empty() ? default_lexicon() : load_lexicon_file(path);
}

void write_output(const RunConfig& cfg, const std::string& data,
                  std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << data;
    out.flush();
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error("cannot write " + cfg.out_path);
  file << data;
  if (!file) throw Error("failed writing " + cfg.out_path);
}

void log_info(std::ostream& err, const std::string& cmd,
              const std::string& fields) {
  err << "level=info cmd=" << cmd << ' ' << fields << '\n';
}

void sort_by_clip(std::vector<TagRecord>& tags) {
  std::stable_sort(tags.begin(), tags.end(),
                   [](const TagRecord& a, const TagRecord& b) {
                     return a.clip_id < b.clip_id;
                   });
}

int cmd_tag_audio(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.probs_path.empty() == cfg.events_path.empty())
    throw UsageError("tag-audio needs exactly one of --probs or --events");
  try {
    validate_thresholds(cfg.thresholds);
  } catch (const ContractError& e) {
    throw UsageError(e.what());
  }

  std::vector<TagRecord> tags;
  if (!cfg.events_path.empty()) {
    auto in = open_input(cfg.events_path);
    const EventMap events = parse_strong_tsv(in);
    std::vector<const EventMap::value_type*> clips;
    for (const auto& entry : events) clips.push_back(&entry);
    tags = parallel_map<TagRecord>(clips.size(), cfg.jobs, [&](std::size_t i) {
      const auto& [clip, evs] = *clips[i];
      return TagRecord{clip, infer_audio_tag(clip_relations(evs)),
                       TagSource::kAudio};
    });
  } else {
    auto in = open_input(cfg.probs_path);
    std::vector<ProbabilityGrid> grids = parse_prob_grids(in);
    tags = parallel_map<TagRecord>(grids.size(), cfg.jobs, [&](std::size_t i) {
      const ProbabilityGrid& grid = grids[i];
      std::vector<EventInterval> events;
      if (cfg.pool_len > 0)
        events = double_threshold(pool_align(grid, cfg.pool_len), cfg.thresholds);
      else
        events = double_threshold(grid, cfg.thresholds);
      return TagRecord{grid.clip_id(), infer_audio_tag(clip_relations(events)),
                       TagSource::kAudio};
    });
  }
  sort_by_clip(tags);
  write_output(cfg, write_tags(tags), out);
  log_info(err, "tag-audio", "clips=" + std::to_string(tags.size()));
  return kExitOk;
}

bool looks_like_references(const std::string& path) {
  auto in = open_input(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    return line.find("\"captions\"") != std::string::npos;
  }
  return false;
}

int cmd_tag_caption(const RunConfig& cfg, std::ostream& out,
                    std::ostream& err) {
  const ConjunctionLexicon lex = resolve_lexicon(cfg);
  // One (clip id, caption text) item per output record.
  std::vector<CaptionRecord> items;
  auto in = open_input(cfg.captions_path);
  if (looks_like_references(cfg.captions_path)) {
    for (auto& refs : parse_references(in)) {
      for (std::size_t k = 0; k < refs.references.size(); ++k)
        items.push_back({refs.clip_id + "#" + std::to_string(k),
                         std::move(refs.references[k])});
    }
  } else {
    items = parse_candidates(in);
  }
  auto tags = parallel_map<TagRecord>(items.size(), cfg.jobs, [&](std::size_t i) {
    return TagRecord{items[i].clip_id,
                     extract_caption_tag(tokenize(items[i].text), lex),
                     TagSource::kText};
  });
  sort_by_clip(tags);
  write_output(cfg, write_tags(tags), out);
  log_info(err, "tag-caption", "captions=" + std::to_string(tags.size()));
  return kExitOk;
}

int cmd_prompts(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto in = open_input(cfg.tags_path);
  const auto tags = parse_tags(in);
  write_output(cfg, emit_prompts(tags), out);
  log_info(err, "prompts", "clips=" + std::to_string(tags.size()));
  return kExitOk;
}

int cmd_stats(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::optional<TagSource> filter;
  if (!cfg.source.empty()) {
    try {
      filter = parse_tag_source(cfg.source);
    } catch (const SchemaError&) {
      throw UsageError("--source must be audio or text");
    }
  }
  auto in = open_input(cfg.tags_path);
  auto tags = parse_tags(in);
  if (filter)
    std::erase_if(tags, [&](const TagRecord& t) { return t.source != *filter; });
  const TagDistribution dist = tag_distribution(tags);
  write_output(cfg, write_distribution(dist), out);
  log_info(err, "stats", "total=" + std::to_string(dist.total));
  return kExitOk;
}

std::set<std::string> parse_metric_selection(const std::string& csv) {
  std::set<std::string> selected;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    if (item.empty()) continue;
    if (std::find(kAllMetrics.begin(), kAllMetrics.end(), item) ==
        kAllMetrics.end())
      throw UsageError("unknown metric '" + item + "'");
    selected.insert(item);
  }
  if (selected.empty()) throw UsageError("--metrics selects nothing");
  return selected;
}

int cmd_evaluate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto selected = parse_metric_selection(cfg.metrics);
  const ConjunctionLexicon lex = resolve_lexicon(cfg);

  auto cand_in = open_input(cfg.candidates_path);
  std::vector<CaptionRecord> candidates = parse_candidates(cand_in);
  auto ref_in = open_input(cfg.references_path);
  std::map<std::string, ReferenceSet> ref_by_clip;
  for (auto& r : parse_references(ref_in)) {
    const std::string clip = r.clip_id;
    if (!ref_by_clip.emplace(clip, std::move(r)).second)
      throw PairingError("duplicate reference clip_id " + clip);
  }
  if (candidates.empty()) throw Error("no candidate captions");

  std::sort(candidates.begin(), candidates.end(),
            [](const CaptionRecord& a, const CaptionRecord& b) {
              return a.clip_id < b.clip_id;
            });
  std::vector<ReferenceSet> refs;
  std::vector<std::string> missing;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (i > 0 && candidates[i].clip_id == candidates[i - 1].clip_id)
      throw PairingError("duplicate candidate clip_id " + candidates[i].clip_id);
    auto it = ref_by_clip.find(candidates[i].clip_id);
    if (it == ref_by_clip.end()) {
      missing.push_back(candidates[i].clip_id);
      continue;
    }
    refs.push_back(it->second);
  }
  if (!missing.empty()) {
    std::string list;
    for (const auto& m : missing) list += (list.empty() ? "" : ", ") + m;
    throw PairingError("no references for clip(s): " + list);
  }

  EvalReport report;
  report.n_clips = candidates.size();
  if (selected.count("acc_temp") || selected.count("f1_temp")) {
    auto labels = parallel_map<TemporalLabel>(
        candidates.size(), cfg.jobs, [&](std::size_t i) {
          return temporal_labels(candidates[i], refs[i], lex);
        });
    const TemporalScores scores = acc_f1_temp(labels);
    if (selected.count("acc_temp")) report.acc_temp = scores.acc;
    if (selected.count("f1_temp")) report.f1_temp = scores.f1;
    report.counts = scores.counts;
  }
  if (selected.count("bleu4")) report.bleu4 = bleu4(candidates, refs);
  if (selected.count("rouge_l")) report.rouge_l = rouge_l(candidates, refs);

  std::vector<TagRecord> cand_tags;
  for (const auto& c : candidates)
    cand_tags.push_back(
        {c.clip_id, extract_caption_tag(tokenize(c.text), lex), TagSource::kText});

  write_output(cfg, write_report(report, tag_distribution(cand_tags)), out);
  log_info(err, "evaluate", "clips=" + std::to_string(report.n_clips));
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Temporal relation tags and caption evaluation"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_shared = [&](CLI::App* sub) {
    sub->add_option("--lexicon", cfg.lexicon_path, "Conjunction lexicon JSON")
        ->check(CLI::ExistingFile);
    sub->add_option("--out", cfg.out_path, "Output path (default: stdout)");
    sub->add_option("--jobs", cfg.jobs, "Worker threads")
        ->check(CLI::PositiveNumber);
  };

  auto* tag_audio = app.add_subcommand("tag-audio", "Temporal tags from SED output");
  add_shared(tag_audio);
  tag_audio->add_option("--probs", cfg.probs_path, "Probability grid JSONL")
      ->check(CLI::ExistingFile);
  tag_audio->add_option("--events", cfg.events_path, "Strong-label TSV")
      ->check(CLI::ExistingFile);
  tag_audio->add_option("--low", cfg.thresholds.low, "Low threshold")
      ->check(CLI::Range(0.0, 1.0));
  tag_audio->add_option("--high", cfg.thresholds.high, "High threshold")
      ->check(CLI::Range(0.0, 1.0));
  tag_audio->add_option("--pool-len", cfg.pool_len, "Pool grids to N frames")
      ->check(CLI::PositiveNumber);

  auto* tag_caption = app.add_subcommand("tag-caption", "Temporal tags from caption text");
  add_shared(tag_caption);
  tag_caption->add_option("--captions", cfg.captions_path, "Caption or reference JSONL")
      ->required()
      ->check(CLI::ExistingFile);

  auto* prompts = app.add_subcommand("prompts", "Decoder prompt tokens from tags");
  add_shared(prompts);
  prompts->add_option("--tags", cfg.tags_path, "Tag JSONL")
      ->required()
      ->check(CLI::ExistingFile);

  auto* stats = app.add_subcommand("stats", "Tag distribution");
  add_shared(stats);
  stats->add_option("--tags", cfg.tags_path, "Tag JSONL")
      ->required()
      ->check(CLI::ExistingFile);
  stats->add_option("--source", cfg.source, "audio or text");

  auto* evaluate = app.add_subcommand("evaluate", "Score candidate captions");
  add_shared(evaluate);
  evaluate->add_option("--candidates", cfg.candidates_path, "Candidate JSONL")
      ->required()
      ->check(CLI::ExistingFile);
  evaluate->add_option("--references", cfg.references_path, "Reference JSONL")
      ->required()
      ->check(CLI::ExistingFile);
  evaluate->add_option("--metrics", cfg.metrics, "Comma-separated metric list");

  std::vector<const char*> argv{"temprel"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsageError;
  }

  try {
    if (tag_audio->parsed()) return cmd_tag_audio(cfg, out, err);
    if (tag_caption->parsed()) return cmd_tag_caption(cfg, out, err);
    if (prompts->parsed()) return cmd_prompts(cfg, out, err);
    if (stats->parsed()) return cmd_stats(cfg, out, err);
    return cmd_evaluate(cfg, out, err);
  } catch (const UsageError& e) {
    err << "level=error usage: " << e.what() << '\n';
    return kExitUsageError;
  } catch (const Error& e) {
    err << "level=error " << e.what() << '\n';
    return kExitDataError;
  }
}

}  // namespace temprel
