// temprel/caption_tag.h

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

#ifndef TEMPREL_CAPTION_TAG_H_
#define TEMPREL_CAPTION_TAG_H_

#include <string>
#include <string_view>
#include <vector>

#include "temprel/core.h"

namespace temprel {

struct TokenizedCaption {
  std::vector<std::string> tokens;

  bool operator==(const TokenizedCaption&) const = default;
};

// Lowercases ASCII, deletes . , ! ? ; : ' " ( ), turns '-' into a space and
// splits on whitespace. Non-ASCII bytes pass through untouched.
TokenizedCaption tokenize(std::string_view text);

// Ground-truth tag from conjunction counts (s sequential, m simultaneous):
// 0 if none, 1 if only simultaneous, 2 if exactly one sequential and no
// simultaneous, 3 otherwise.
TemporalTag extract_caption_tag(const TokenizedCaption& caption,
                                const ConjunctionLexicon& lex);

// True iff some token is in the metric lexicon.
bool has_sequential_cw(const TokenizedCaption& caption,
                       const ConjunctionLexicon& lex);

}  // namespace temprel

#endif  // TEMPREL_CAPTION_TAG_H_
