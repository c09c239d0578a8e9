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

#include "cto/corpus/sentence_splitter.h"

#include "cto/text/utf8.h"

namespace cto::corpus {

namespace {

bool IsTerminal(char32_t cp) {
  return cp == '.' || cp == '!' || cp == '?' || cp == ':';
}

bool IsClosing(char32_t cp) {
  return cp == '"' || cp == ')' || cp == ']' || cp == '\'' || cp == 0x201C ||
         cp == 0x201D || cp == 0x2019 || cp == 0xBB || cp == 0xAB;
}

bool IsOpening(char32_t cp) {
  return cp == '"' || cp == '(' || cp == '[' || cp == 0x201E ||
         cp == 0x201C || cp == 0x201A || cp == 0xAB || cp == 0xBB;
}

bool IsBoundaryBefore(std::string_view text, std::size_t pos) {
  if (pos == 0) return true;
  const char c = text[pos - 1];
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '(' ||
         c == '"' || c == '[';
}

// Start of the whitespace-delimited word ending just before `pos`.
std::size_t WordStart(std::string_view text, std::size_t pos) {
  while (pos > 0) {
    const char c = text[pos - 1];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '(' ||
        c == '"' || c == '[') {
      break;
    }
    --pos;
  }
  return pos;
}

void Emit(std::string_view text, std::size_t begin, std::size_t end,
          std::vector<Sentence>& out) {
  while (begin < end) {
    std::size_t probe = begin;
    if (!text::IsSpace(text::DecodeAt(text, probe))) break;
    begin = probe;
  }
  while (end > begin) {
    std::size_t prev = end - 1;
    while (prev > begin &&
           (static_cast<unsigned char>(text[prev]) & 0xC0) == 0x80) {
      --prev;
    }
    std::size_t probe = prev;
    if (!text::IsSpace(text::DecodeAt(text, probe))) break;
    end = prev;
  }
  if (begin >= end) return;
  Sentence s;
  s.index = out.size();
  s.text = std::string(text.substr(begin, end - begin));
  s.begin = begin;
  s.end = end;
  out.push_back(std::move(s));
}

}  // namespace

const std::vector<std::string>& DefaultAbbreviations() {
  static const std::vector<std::string> kList = {
      "Abg.",   "Dr.",    "Hr.",   "Fr.",     "Nr.",    "z. B.", "z.B.",
      "bzw.",   "Prof.",  "usw.",  "vgl.",    "ca.",    "d. h.", "d.h.",
      "u. a.",  "u.a.",   "Präs.", "Drucks.", "Art.",   "Abs.",  "Mio.",
      "Mrd.",   "ggf.",   "sog.",  "evtl.",   "St.",    "S.",    "Ziff.",
      "o. ä.",  "Dipl.",  "Ing.",  "Frhr.",   "Bd.",    "lfd.",  "insb.",
  };
  return kList;
}

SentenceSplitter::SentenceSplitter()
    : abbreviations_(DefaultAbbreviations()) {}

SentenceSplitter::SentenceSplitter(std::vector<std::string> abbreviations)
    : abbreviations_(std::move(abbreviations)) {}

bool SentenceSplitter::ClosesAbbreviation(std::string_view text,
                                          std::size_t period) const {
  for (const std::string& abbr : abbreviations_) {
    for (std::size_t k = 0; k < abbr.size(); ++k) {
      if (abbr[k] != '.' || k > period) continue;
      const std::size_t start = period - k;
      if (start + abbr.size() > text.size()) continue;
      if (text.compare(start, abbr.size(), abbr) != 0) continue;
      if (IsBoundaryBefore(text, start)) return true;
    }
  }
  // Single-letter initial ("J.") or ordinal number ("7.").
  const std::size_t word = WordStart(text, period);
  const std::string_view before = text.substr(word, period - word);
  if (!before.empty()) {
    bool digits = true;
    for (char c : before) digits = digits && c >= '0' && c <= '9';
    if (digits) return true;
    std::size_t pos = 0;
    const char32_t first = text::DecodeAt(before, pos);
    if (pos == before.size() && text::IsUpper(first)) return true;
  }
  return false;
}

std::vector<Sentence> SentenceSplitter::Split(std::string_view text) const {
  std::vector<Sentence> out;
  std::size_t sentence_begin = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t mark = pos;
    const char32_t cp = text::DecodeAt(text, pos);
    if (!IsTerminal(cp)) continue;

    // Swallow the rest of a punctuation run such as "?!" or ".)".
    std::size_t run_end = pos;
    while (run_end < text.size()) {
      std::size_t next = run_end;
      const char32_t c = text::DecodeAt(text, next);
      if (!IsTerminal(c) && !IsClosing(c)) break;
      run_end = next;
    }
    std::size_t after = run_end;
    bool saw_space = false;
    while (after < text.size()) {
      std::size_t next = after;
      if (!text::IsSpace(text::DecodeAt(text, next))) break;
      saw_space = true;
      after = next;
    }
    pos = run_end;
    if (!saw_space || after >= text.size()) continue;

    std::size_t look = after;
    char32_t next_cp = text::DecodeAt(text, look);
    if (IsOpening(next_cp) && look < text.size()) {
      next_cp = text::DecodeAt(text, look);
    }
    if (!text::IsUpper(next_cp)) continue;
    if (cp == '.' && ClosesAbbreviation(text, mark)) continue;

    Emit(text, sentence_begin, run_end, out);
    sentence_begin = after;
    pos = after;
  }
  Emit(text, sentence_begin, text.size(), out);
  return out;
}

std::vector<Sentence> SegmentSentences(std::string_view text) {
  static const SentenceSplitter kDefault;
  return kDefault.Split(text);
}

}  // namespace cto::corpus
