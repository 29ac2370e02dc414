// src/caption_tag.cc

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

#include "temprel/caption_tag.h"

#include <algorithm>

namespace temprel {

namespace {

bool is_stripped(char c) {
  switch (c) {
    case '.': case ',': case '!': case '?': case ';': case ':':
    case '\'': case '"': case '(': case ')':
      return true;
    default:
      return false;
  }
}

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

}  // namespace

TokenizedCaption tokenize(std::string_view text) {
  TokenizedCaption out;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) out.tokens.push_back(std::move(current));
    current.clear();
  };
  for (char c : text) {
    if (is_stripped(c)) continue;
    if (c == '-' || is_space(c)) {
      flush();
      continue;
    }
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    current.push_back(c);
  }
  flush();
  return out;
}

TemporalTag extract_caption_tag(const TokenizedCaption& caption,
                                const ConjunctionLexicon& lex) {
  std::size_t seq = 0, sim = 0;
  for (const auto& tok : caption.tokens) {
    if (lex.sequential_words.count(tok)) ++seq;
    if (lex.simultaneous_words.count(tok)) ++sim;
  }
  if (seq == 0) return TemporalTag(sim == 0 ? 0 : 1);
  if (seq == 1 && sim == 0) return TemporalTag(2);
  return TemporalTag(3);
}

bool has_sequential_cw(const TokenizedCaption& caption,
                       const ConjunctionLexicon& lex) {
  return std::any_of(caption.tokens.begin(), caption.tokens.end(),
                     [&](const std::string& tok) {
                       return lex.metric_sequential_words.count(tok) > 0;
                     });
}

}  // namespace temprel
