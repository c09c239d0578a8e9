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

#include "cto/mentions/ner_client.h"

#include <gtest/gtest.h>

#include "cto/error.h"
#include "support/stub_server.h"

namespace cto::mentions {
namespace {

using testing::StubServer;

detect::CtoEvent EventFor(std::string sentence, std::size_t sentence_index = 0) {
  detect::CtoEvent e;
  e.protocol.legislative_period = 19;
  e.protocol.session_number = 12;
  e.contribution_index = 5;
  e.sentence_index = sentence_index;
  e.matched_sentence = std::move(sentence);
  return e;
}

net::Endpoint EndpointOf(const StubServer& s) {
  auto ep = net::Endpoint::Parse(s.url("/ner"));
  ep.timeout = std::chrono::milliseconds(2000);
  return ep;
}

TEST(NerClientTest, SinglePersonSpan) {
  // "Ich rufe den Abgeordneten " is 26 code points.
  StubServer stub("/ner", [](const std::string&) {
    return std::pair{200, std::string(R"([{"start": 26, "end": 32, "label": "PER"}])")};
  });
  const auto outcome = ExtractViaExternal(
      EventFor("Ich rufe den Abgeordneten Wehner zur Ordnung."), EndpointOf(stub));
  ASSERT_EQ(outcome.mentions.size(), 1u);
  EXPECT_EQ(outcome.mentions[0].surface, "Wehner");
  EXPECT_EQ(outcome.mentions[0].source, MentionSource::kExternalNer);
  EXPECT_EQ(outcome.disposition, Disposition::kSingle);
  ASSERT_EQ(stub.calls(), 1u);
  EXPECT_EQ(stub.bodies()[0],
            R"({"text":"Ich rufe den Abgeordneten Wehner zur Ordnung."})");
}

TEST(NerClientTest, OffsetsCountCodePoints) {
  // "Ich rufe Frau " is 14 code points; "Müller" is 6 code points, 7 bytes.
  StubServer stub("/ner", [](const std::string&) {
    return std::pair{200, std::string(
        R"([{"start": 14, "end": 20, "label": "PER"}, {"start": 0, "end": 3, "label": "MISC"}])")};
  });
  const auto outcome = NerClient(EndpointOf(stub))
                           .Extract(EventFor("Ich rufe Frau Müller zur Ordnung."));
  ASSERT_EQ(outcome.mentions.size(), 1u);
  EXPECT_EQ(outcome.mentions[0].surface, "Müller");
  EXPECT_EQ(outcome.mentions[0].begin, 14u);
  EXPECT_EQ(outcome.mentions[0].end, 21u);
  EXPECT_EQ(outcome.mentions[0].honorific, Honorific::kFrau);
}

TEST(NerClientTest, EmptyAnswerFallsBackToPatterns) {
  StubServer stub("/ner", [](const std::string&) {
    return std::pair{200, std::string("[]")};
  });
  const auto event = EventFor("Ich rufe die Abgeordneten Schmidt und Meyer zur Ordnung.");
  const auto outcome = NerClient(EndpointOf(stub)).Extract(event);
  EXPECT_EQ(outcome, ExtractMentions(event));
  EXPECT_EQ(outcome.disposition, Disposition::kMultiple);
}

TEST(NerClientTest, UnreachableEndpointNamesEvent) {
  auto ep = net::Endpoint::Parse("http://127.0.0.1:" +
                                 std::to_string(testing::UnusedPort()) + "/ner");
  ep.timeout = std::chrono::milliseconds(500);
  try {
    NerClient(ep).Extract(EventFor("Ich rufe Sie zur Ordnung.", 2));
    FAIL() << "expected TransportError";
  } catch (const TransportError& e) {
    EXPECT_NE(std::string(e.what()).find("19-12-5-2"), std::string::npos);
  }
}

TEST(NerClientTest, MalformedResponsesAreProtocolErrors) {
  for (const char* body :
       {"not json", R"({"start": 0})", R"([{"start": 0, "end": 3}])",
        R"([{"start": 5, "end": 2, "label": "PER"}])",
        R"([{"start": 0, "end": 999, "label": "PER"}])",
        R"([{"start": -1, "end": 2, "label": "PER"}])"}) {
    StubServer stub("/ner", [body](const std::string&) {
      return std::pair{200, std::string(body)};
    });
    EXPECT_THROW(NerClient(EndpointOf(stub)).Extract(EventFor("Ich rufe Sie zur Ordnung.")),
                 ProtocolError)
        << body;
  }
}

TEST(NerClientTest, HttpErrorIsProtocolError) {
  StubServer stub("/ner", [](const std::string&) {
    return std::pair{500, std::string("{}")};
  });
  EXPECT_THROW(NerClient(EndpointOf(stub)).Extract(EventFor("Ich rufe Sie zur Ordnung.")),
               ProtocolError);
}

TEST(NerClientTest, ExtractAllKeepsInputOrder) {
  StubServer stub("/ner", [](const std::string&) {
    return std::pair{200, std::string("[]")};
  });
  std::vector<detect::CtoEvent> events;
  for (std::size_t i = 0; i < 12; ++i) {
    events.push_back(EventFor(i % 2 ? "Ich rufe Herrn Hahn zur Ordnung."
                                    : "Ich rufe Sie zur Ordnung.",
                              i));
  }
  const auto outcomes = NerClient(EndpointOf(stub)).ExtractAll(events, 4);
  ASSERT_EQ(outcomes.size(), events.size());
  for (std::size_t i = 0; i < events.size(); ++i) {
    EXPECT_EQ(outcomes[i].event, events[i].ref());
    EXPECT_EQ(outcomes[i].mentions.size(), i % 2 ? 1u : 0u);
  }
  EXPECT_EQ(stub.calls(), events.size());
}

TEST(NerClientTest, ExtractAllRethrows) {
  StubServer stub("/ner", [](const std::string& body) {
    if (body.find("Hahn") != std::string::npos) return std::pair{200, std::string("bad")};
    return std::pair{200, std::string("[]")};
  });
  std::vector<detect::CtoEvent> events = {
      EventFor("Ich rufe Sie zur Ordnung.", 0),
      EventFor("Ich rufe Herrn Hahn zur Ordnung.", 1),
      EventFor("Ich rufe Sie zur Ordnung.", 2)};
  EXPECT_THROW(NerClient(EndpointOf(stub)).ExtractAll(events, 2), ProtocolError);
}

TEST(EndpointTest, Parse) {
  const auto ep = net::Endpoint::Parse("http://localhost:8500/ner");
  EXPECT_EQ(ep.host, "localhost");
  EXPECT_EQ(ep.port, 8500);
  EXPECT_EQ(ep.path, "/ner");
  EXPECT_EQ(ep.ToString(), "http://localhost:8500/ner");
  const auto bare = net::Endpoint::Parse("http://example.org");
  EXPECT_EQ(bare.port, 80);
  EXPECT_EQ(bare.path, "/");
  EXPECT_THROW(net::Endpoint::Parse("https://example.org"), ValidationError);
  EXPECT_THROW(net::Endpoint::Parse("http://:80/x"), ValidationError);
  EXPECT_THROW(net::Endpoint::Parse("http://host:notaport/"), ValidationError);
  EXPECT_THROW(net::Endpoint::Parse("http://host:70000/"), ValidationError);
}

}  // namespace
}  // namespace cto::mentions
