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

#include "cto/topics/topics.h"

#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "cto/corpus/protocol_parser.h"
#include "cto/corpus/sentence_splitter.h"
#include "cto/error.h"
#include "support/fixtures.h"
#include "support/stub_server.h"

namespace cto::topics {
namespace {

using testing::StubServer;

corpus::SpeechContribution Speech(std::string text,
                                  corpus::Role role = corpus::Role::kMember) {
  corpus::SpeechContribution c;
  c.role = role;
  c.speaker_name = "Sprecher";
  c.raw_text = std::move(text);
  c.sentences = corpus::SegmentSentences(c.raw_text);
  return c;
}

Lexicon TestLexicon() {
  return Lexicon::FromFile(testing::TestDataDir() / "lexicon_gov.tsv");
}

net::Endpoint EndpointOf(const StubServer& s) {
  auto ep = net::Endpoint::Parse(s.url("/topic"));
  ep.timeout = std::chrono::milliseconds(2000);
  return ep;
}

TEST(TopicsTest, TwentyOnePolicyCodes) {
  std::set<std::string> codes;
  for (Topic t : PolicyTopics()) {
    EXPECT_TRUE(IsPolicyTopic(t));
    codes.emplace(TopicCode(t));
    EXPECT_EQ(ParseTopic(TopicCode(t)), t);
  }
  EXPECT_EQ(codes.size(), 21u);
  EXPECT_TRUE(codes.count("social_welfare"));
  EXPECT_TRUE(codes.count("public_lands"));
  EXPECT_TRUE(codes.count("government_operations"));
  EXPECT_FALSE(IsPolicyTopic(Topic::kPresidencyAction));
  EXPECT_FALSE(IsPolicyTopic(Topic::kUnknown));
  EXPECT_EQ(ParseTopic("presidency_action"), Topic::kPresidencyAction);
  EXPECT_EQ(ParseTopic("unknown"), Topic::kUnknown);
  EXPECT_EQ(ParseTopic("weather"), std::nullopt);
}

TEST(BaselineTest, PresidentIsPresidencyAction) {
  const auto lex = TestLexicon();
  EXPECT_EQ(ClassifyBaseline(Speech("Der Haushalt der Bundesregierung.",
                                    corpus::Role::kPresident),
                             lex),
            Topic::kPresidencyAction);
}

TEST(BaselineTest, GovernmentKeywords) {
  const auto lex = TestLexicon();
  const auto c = Speech(
      "Der Haushalt des Ministers ist ein Haushaltsloch. Die Bundesregierung "
      "und ihre Verwaltung müssen die Steuer senken.");
  EXPECT_EQ(ClassifyBaseline(c, lex), Topic::kGovernmentOperations);
}

TEST(BaselineTest, NoHitsIsUnknown) {
  EXPECT_EQ(ClassifyBaseline(Speech("Guten Morgen, liebe Kollegen."), TestLexicon()),
            Topic::kUnknown);
  EXPECT_EQ(ClassifyBaseline(Speech(""), TestLexicon()), Topic::kUnknown);
}

TEST(BaselineTest, TiesFollowCodeOrder) {
  const auto lex = TestLexicon();
  // One health hit, one immigration hit: health is declared first.
  EXPECT_EQ(ClassifyBaseline(Speech("Asyl und Pflege."), lex), Topic::kHealth);
  // macroeconomics precedes government_operations.
  EXPECT_EQ(ClassifyBaseline(Speech("Steuer und Haushalt."), lex), Topic::kMacroeconomics);
}

TEST(BaselineTest, WholeSpeechCounts) {
  const auto lex = TestLexicon();
  // The first sentence alone leans to health; the whole speech has more
  // immigration hits.
  const auto c = Speech("Pflege und Gesundheit sind wichtig. Asyl. Migration. Flüchtlinge.");
  EXPECT_EQ(ClassifyBaseline(c, lex), Topic::kImmigration);
}

TEST(BaselineTest, Deterministic) {
  const auto lex = Lexicon::FromFile(testing::DataDir() / "lexicon.tsv");
  const auto protocols = corpus::ParseCorpus(testing::FixtureDir() / "protocols",
                                             corpus::ProtocolParser());
  for (const auto& p : protocols) {
    for (const auto& c : p.contributions) {
      const Topic t = ClassifyBaseline(c, lex);
      EXPECT_EQ(ClassifyBaseline(c, lex), t);
      EXPECT_TRUE(IsPolicyTopic(t) || t == Topic::kUnknown || t == Topic::kPresidencyAction);
      EXPECT_EQ(t == Topic::kPresidencyAction, c.is_president());
    }
  }
}

TEST(LexiconTest, CountsPrefixHitsOncePerToken) {
  const auto lex = TestLexicon();
  const auto hits = lex.Count("Haushaltsplan HAUSHALT haushalt-Debatte Staatshaushalt");
  EXPECT_EQ(hits[static_cast<std::size_t>(Topic::kGovernmentOperations)], 3u);
}

TEST(LexiconTest, ParseErrors) {
  std::istringstream unknown("weather\tregen\n");
  EXPECT_THROW(Lexicon::FromStream(unknown), ParseError);
  std::istringstream repeated("health\ta\nhealth\tb\n");
  EXPECT_THROW(Lexicon::FromStream(repeated), ParseError);
  std::istringstream spaced("health\tkranken haus\n");
  EXPECT_THROW(Lexicon::FromStream(spaced), ParseError);
  std::istringstream presidency("presidency_action\tpräsident\n");
  EXPECT_THROW(Lexicon::FromStream(presidency), ParseError);
  std::istringstream no_tab("health\n");
  EXPECT_THROW(Lexicon::FromStream(no_tab), ParseError);
  Lexicon lex;
  EXPECT_THROW(lex.Set(Topic::kUnknown, {"x"}), ValidationError);
  EXPECT_THROW(Lexicon::FromFile("/nonexistent/lexicon.tsv"), IoError);
}

TEST(LexiconTest, BundledLexiconCoversAllTopics) {
  const auto lex = Lexicon::FromFile(testing::DataDir() / "lexicon.tsv");
  for (Topic t : PolicyTopics()) EXPECT_FALSE(lex.Keywords(t).empty()) << TopicCode(t);
}

TEST(TopicClientTest, ReturnsStubLabelForWholeSpeech) {
  StubServer stub("/topic", [](const std::string&) {
    return std::pair{200, std::string(R"({"topic": "immigration"})")};
  });
  const auto c = Speech("Erster Satz. Zweiter Satz über Asyl.");
  EXPECT_EQ(ClassifyExternal(c, EndpointOf(stub)), Topic::kImmigration);
  ASSERT_EQ(stub.calls(), 1u);
  EXPECT_EQ(stub.bodies()[0], R"({"text":"Erster Satz. Zweiter Satz über Asyl."})");
}

TEST(TopicClientTest, PresidentNeverCallsEndpoint) {
  StubServer stub("/topic", [](const std::string&) {
    return std::pair{200, std::string(R"({"topic": "immigration"})")};
  });
  EXPECT_EQ(ClassifyExternal(Speech("Das Wort hat Frau Roth.", corpus::Role::kPresident),
                             EndpointOf(stub)),
            Topic::kPresidencyAction);
  EXPECT_EQ(stub.calls(), 0u);
}

TEST(TopicClientTest, ClosedLabelSet) {
  for (const char* body : {R"({"topic": "weather"})", R"({"topic": "presidency_action"})",
                           R"({"topic": "unknown"})", R"({"label": "health"})",
                           R"({"topic": 3})", "[]", "nonsense"}) {
    StubServer stub("/topic", [body](const std::string&) {
      return std::pair{200, std::string(body)};
    });
    EXPECT_THROW(ClassifyExternal(Speech("Text."), EndpointOf(stub)), ProtocolError) << body;
  }
}

TEST(TopicClientTest, TransportFailure) {
  auto ep = net::Endpoint::Parse("http://127.0.0.1:" +
                                 std::to_string(testing::UnusedPort()) + "/topic");
  ep.timeout = std::chrono::milliseconds(500);
  EXPECT_THROW(ClassifyExternal(Speech("Text."), ep), TransportError);
}

TEST(TopicIoTest, RoundTrip) {
  const std::vector<TopicAssignment> topics = {
      {19, 10, 0, Topic::kPresidencyAction},
      {19, 10, 1, Topic::kSocialWelfare},
      {19, 10, 2, Topic::kUnknown}};
  std::stringstream ss;
  WriteTopics(ss, topics);
  EXPECT_EQ(ReadTopics(ss), topics);
  std::istringstream bad(R"({"lp":19,"session":1,"contribution":0,"topic":"weather"})" "\n");
  EXPECT_THROW(ReadTopics(bad), SchemaError);
}

}  // namespace
}  // namespace cto::topics
