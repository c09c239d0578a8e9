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

#include "cto/detect/rules.h"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "cto/error.h"
#include "cto/text/utf8.h"
#include "support/fixtures.h"

namespace cto::detect {
namespace {

using testing::LoadLabeledSentences;

TEST(RulesTest, LabeledSuite) {
  const auto suite = LoadLabeledSentences();
  ASSERT_GE(suite.size(), 50u);
  for (const auto& item : suite) {
    EXPECT_EQ(MatchRule1(item.sentence), item.rule1) << item.sentence;
    EXPECT_EQ(MatchRule2(item.sentence), item.rule2) << item.sentence;
  }
}

TEST(RulesTest, Rule1Examples) {
  EXPECT_TRUE(MatchRule1("Ich erteile Ihnen einen Ordnungsruf."));
  EXPECT_FALSE(MatchRule1("Ich erteile Ihnen keinen Ordnungsruf."));
  EXPECT_FALSE(MatchRule1("Einen Ordnungsruf erteile ich Ihnen nicht."));
  EXPECT_FALSE(MatchRule1("Der Ordnungsruf steht im Protokoll."));
}

TEST(RulesTest, Rule2Examples) {
  EXPECT_TRUE(MatchRule2("Ich rufe den Abgeordneten Wehner zur Ordnung."));
  EXPECT_TRUE(MatchRule2(
      "Ich kann nur wegen der Zwischenrufe zur Ordnung rufen, die ich selber höre."));
  EXPECT_FALSE(MatchRule2("Ich rufe das Gesetz zur Ordnung des Kreditwesens auf."));
}

TEST(RulesTest, GuardOnlyBlocksTheGuardedOccurrence) {
  // A second, unguarded occurrence still matches.
  EXPECT_TRUE(MatchRule1(
      "Keinen Ordnungsruf gab es gestern, heute erteile ich einen Ordnungsruf."));
  EXPECT_TRUE(MatchRule2(
      "Ich rufe das Gesetz zur Ordnung auf und rufe Sie zur Ordnung."));
}

TEST(RulesTest, RuleOnePrecedence) {
  RuleMatcher m;
  EXPECT_EQ(m.Match("Ich erteile Ihnen einen Ordnungsruf und rufe Sie zur Ordnung."),
            MatchedRule::kRule1);
  EXPECT_EQ(m.Match("Ich rufe Sie zur Ordnung."), MatchedRule::kRule2);
  EXPECT_EQ(m.Match("Ich erteile Ihnen das Wort."), std::nullopt);
}

TEST(RulesTest, CaseInsensitive) {
  for (const auto& item : LoadLabeledSentences()) {
    const std::string upper = text::UpperCase(item.sentence);
    const std::string lower = text::FoldCase(item.sentence);
    EXPECT_EQ(MatchRule1(upper), MatchRule1(item.sentence)) << upper;
    EXPECT_EQ(MatchRule2(upper), MatchRule2(item.sentence)) << upper;
    EXPECT_EQ(MatchRule1(lower), MatchRule1(item.sentence)) << lower;
    EXPECT_EQ(MatchRule2(lower), MatchRule2(item.sentence)) << lower;
  }
}

TEST(RulesTest, AppendedNichtAlwaysBlocksRule1) {
  for (const auto& item : LoadLabeledSentences()) {
    EXPECT_FALSE(MatchRule1(item.sentence + " nicht")) << item.sentence;
    EXPECT_FALSE(MatchRule1(item.sentence + " NICHT.")) << item.sentence;
  }
}

TEST(RulesTest, AtypicalRule2) {
  RuleMatcher m;
  EXPECT_TRUE(m.IsAtypicalRule2(
      "Ich kann nur wegen der Zwischenrufe zur Ordnung rufen, die ich selber höre."));
  EXPECT_FALSE(m.IsAtypicalRule2("Ich rufe Sie zur Ordnung."));
  EXPECT_FALSE(m.IsAtypicalRule2("Der Ordnungsruf steht im Protokoll."));
}

TEST(RuleConfigTest, ParsesKeys) {
  std::istringstream in(
      "# custom\n"
      "rule1.keyword = Ordnungsruf\n"
      "rule1.verbs = erteile, erteilen, verhänge\n"
      "rule2.phrase = zur Ordnung\n"
      "rule2.preceding_guards = gesetz, gesetzes, verordnung\n"
      "abbreviations = Abg., Dr.\n");
  const RuleConfig config = RuleConfig::FromStream(in);
  EXPECT_EQ(config.rule1_verbs.size(), 3u);
  EXPECT_EQ(config.rule2_phrase, (std::vector<std::string>{"zur", "Ordnung"}));
  EXPECT_EQ(config.abbreviations, (std::vector<std::string>{"Abg.", "Dr."}));
  RuleMatcher m(config);
  EXPECT_TRUE(m.MatchRule1("Ich verhänge einen Ordnungsruf."));
  EXPECT_FALSE(m.MatchRule2("Ich rufe die Verordnung zur Ordnung auf."));
}

TEST(RuleConfigTest, BundledFileMatchesDefaults) {
  std::ifstream in(testing::DataDir() / "rules.conf");
  ASSERT_TRUE(in);
  RuleMatcher bundled(RuleConfig::FromStream(in));
  for (const auto& item : LoadLabeledSentences()) {
    EXPECT_EQ(bundled.MatchRule1(item.sentence), item.rule1) << item.sentence;
    EXPECT_EQ(bundled.MatchRule2(item.sentence), item.rule2) << item.sentence;
  }
}

TEST(RuleConfigTest, Errors) {
  std::istringstream unknown("rule3.keyword = x\n");
  EXPECT_THROW(RuleConfig::FromStream(unknown), ParseError);
  std::istringstream no_eq("rule1.keyword\n");
  EXPECT_THROW(RuleConfig::FromStream(no_eq), ParseError);
  std::istringstream two("rule1.keyword = a, b\n");
  EXPECT_THROW(RuleConfig::FromStream(two), ParseError);
  RuleConfig empty;
  empty.rule1_keyword.clear();
  EXPECT_THROW(RuleMatcher{empty}, ValidationError);
}

TEST(RulesTest, RuleNames) {
  EXPECT_EQ(RuleName(MatchedRule::kRule1), "rule1");
  EXPECT_EQ(ParseRuleName("rule2"), MatchedRule::kRule2);
  EXPECT_EQ(ParseRuleName("rule3"), std::nullopt);
}

}  // namespace
}  // namespace cto::detect
