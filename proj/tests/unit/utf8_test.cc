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

#include "cto/text/utf8.h"

#include <gtest/gtest.h>

namespace cto::text {
namespace {

TEST(Utf8Test, DecodesMultiByteSequences) {
  const std::string s = "aä€😀";
  std::size_t pos = 0;
  EXPECT_EQ(DecodeAt(s, pos), U'a');
  EXPECT_EQ(DecodeAt(s, pos), U'ä');
  EXPECT_EQ(DecodeAt(s, pos), U'€');
  EXPECT_EQ(DecodeAt(s, pos), U'😀');
  EXPECT_EQ(pos, s.size());
}

TEST(Utf8Test, InvalidBytesBecomeReplacement) {
  const std::string s = "\xC3";  // truncated two-byte sequence
  std::size_t pos = 0;
  EXPECT_EQ(DecodeAt(s, pos), 0xFFFDu);
  EXPECT_EQ(pos, 1u);
  const std::string bad = "\xFF" "a";
  pos = 0;
  EXPECT_EQ(DecodeAt(bad, pos), 0xFFFDu);
  EXPECT_EQ(DecodeAt(bad, pos), U'a');
}

TEST(Utf8Test, EncodeRoundTrips) {
  for (char32_t cp : {U'A', U'ß', U'€', U'😀'}) {
    std::string out;
    AppendUtf8(out, cp);
    std::size_t pos = 0;
    EXPECT_EQ(DecodeAt(out, pos), cp);
    EXPECT_EQ(pos, out.size());
  }
}

TEST(Utf8Test, CaseMappingCoversUmlauts) {
  EXPECT_EQ(FoldCase("ÄRGER Über ÖL"), "ärger über öl");
  EXPECT_EQ(UpperCase("straße äöü"), "STRAßE ÄÖÜ");
  EXPECT_EQ(FoldCase(UpperCase("ordnungsruf")), "ordnungsruf");
}

TEST(Utf8Test, StripDiacritics) {
  EXPECT_EQ(StripDiacritics("Schäuble"), "Schauble");
  EXPECT_EQ(StripDiacritics("Strauß"), "Strauss");
  EXPECT_EQ(StripDiacritics("Gysi"), "Gysi");
}

TEST(Utf8Test, NormalizeWhitespace) {
  EXPECT_EQ(NormalizeWhitespace("  a \t b\n\nc  "), "a b c");
  EXPECT_EQ(NormalizeWhitespace("a b"), "a b");
  EXPECT_EQ(NormalizeWhitespace(""), "");
  EXPECT_EQ(NormalizeWhitespace(" \n "), "");
}

TEST(Utf8Test, TokenizeStripsEdgePunctuation) {
  const std::string s = "„Ich rufe Sie zur Ordnung!“ – sagte er.";
  const auto tokens = Tokenize(s);
  std::vector<std::string> texts;
  for (const auto& t : tokens) texts.emplace_back(t.text);
  EXPECT_EQ(texts, (std::vector<std::string>{"Ich", "rufe", "Sie", "zur",
                                             "Ordnung", "sagte", "er"}));
  for (const auto& t : tokens) {
    EXPECT_EQ(s.substr(t.begin, t.end - t.begin), t.text);
  }
}

TEST(Utf8Test, TokenizeKeepsInnerPunctuation) {
  const auto tokens = Tokenize("[CDU/CSU] z.B.");
  ASSERT_EQ(tokens.size(), 2u);
  EXPECT_EQ(tokens[0].text, "CDU/CSU");
  EXPECT_EQ(tokens[1].text, "z.B");
}

TEST(Utf8Test, StartsUpper) {
  EXPECT_TRUE(StartsUpper("Über"));
  EXPECT_TRUE(StartsUpper("A"));
  EXPECT_FALSE(StartsUpper("über"));
  EXPECT_FALSE(StartsUpper(""));
  EXPECT_FALSE(StartsUpper("1A"));
}

TEST(Utf8Test, CodepointOffsets) {
  const std::string s = "Größe";
  EXPECT_EQ(CodepointCount(s), 5u);
  EXPECT_EQ(ByteOffsetOfCodepoint(s, 0), 0u);
  EXPECT_EQ(ByteOffsetOfCodepoint(s, 3), 4u);
  EXPECT_EQ(ByteOffsetOfCodepoint(s, 5), s.size());
  EXPECT_EQ(ByteOffsetOfCodepoint(s, 6), std::string_view::npos);
}

}  // namespace
}  // namespace cto::text
