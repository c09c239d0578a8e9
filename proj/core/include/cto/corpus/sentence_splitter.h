// Copyright 2026 The cto Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CTO_CORPUS_SENTENCE_SPLITTER_H_
#define CTO_CORPUS_SENTENCE_SPLITTER_H_

#include <string>
#include <string_view>
#include <vector>

#include "cto/corpus/types.h"

namespace cto::corpus {

// Abbreviations shipped with the toolkit; the rule config file may replace
// them.
const std::vector<std::string>& DefaultAbbreviations();

// Rule-based splitter. A boundary is a run of . ! ? : (optionally followed
// by closing quotes or brackets), then whitespace, then an uppercase letter
// (optionally behind an opening quote or bracket). A period does not end a
// sentence when it closes a listed abbreviation, a single-letter initial or
// an ordinal number ("7. September").
class SentenceSplitter {
 public:
  SentenceSplitter();
  explicit SentenceSplitter(std::vector<std::string> abbreviations);

  std::vector<Sentence> Split(std::string_view text) const;

  const std::vector<std::string>& abbreviations() const {
    return abbreviations_;
  }

 private:
  bool ClosesAbbreviation(std::string_view text, std::size_t period) const;

  std::vector<std::string> abbreviations_;
};

// Split with the default abbreviation list.
std::vector<Sentence> SegmentSentences(std::string_view text);

}  // namespace cto::corpus

#endif  // CTO_CORPUS_SENTENCE_SPLITTER_H_
