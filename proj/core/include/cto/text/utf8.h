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

#ifndef CTO_TEXT_UTF8_H_
#define CTO_TEXT_UTF8_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

// Small UTF-8 helpers tuned for German parliamentary text. Case mapping
// covers ASCII and the Latin-1 supplement, which is all the protocols use.
namespace cto::text {

// Decodes the code point starting at `pos` and advances `pos`. Invalid bytes
// decode as U+FFFD and advance by one.
char32_t DecodeAt(std::string_view s, std::size_t& pos);
void AppendUtf8(std::string& out, char32_t cp);

std::string FoldCase(std::string_view s);
std::string UpperCase(std::string_view s);

// Maps accented Latin letters to their base letter; ß becomes "ss".
std::string StripDiacritics(std::string_view s);

// Collapses whitespace runs (including U+00A0) to one space and trims.
std::string NormalizeWhitespace(std::string_view s);

bool IsSpace(char32_t cp);
bool IsUpper(char32_t cp);
bool IsEdgePunctuation(char32_t cp);

// First code point of `s` is an uppercase letter.
bool StartsUpper(std::string_view s);

struct Token {
  std::string_view text;  // edge punctuation removed
  std::size_t begin = 0;  // byte offsets into the source string
  std::size_t end = 0;
};

// Whitespace tokenization with punctuation stripped from token edges. Tokens
// that consist only of punctuation are dropped.
std::vector<Token> Tokenize(std::string_view s);

std::size_t CodepointCount(std::string_view s);

// Byte offset of the `index`-th code point; npos when out of range
// (index == CodepointCount(s) maps to s.size()).
std::size_t ByteOffsetOfCodepoint(std::string_view s, std::size_t index);

}  // namespace cto::text

#endif  // CTO_TEXT_UTF8_H_
