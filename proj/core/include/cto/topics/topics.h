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

#ifndef CTO_TOPICS_TOPICS_H_
#define CTO_TOPICS_TOPICS_H_

#include <array>
#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "cto/corpus/types.h"
#include "cto/net/endpoint.h"

namespace cto::topics {

// 21 major policy topics (Comparative Agendas scheme) plus the two
// non-policy labels. Declaration order is the tie-break order.
enum class Topic {
  kMacroeconomics,
  kCivilRights,
  kHealth,
  kAgriculture,
  kLabor,
  kEducation,
  kEnvironment,
  kEnergy,
  kImmigration,
  kTransportation,
  kLawAndCrime,
  kSocialWelfare,
  kHousing,
  kDomesticCommerce,
  kDefense,
  kTechnology,
  kForeignTrade,
  kInternationalAffairs,
  kGovernmentOperations,
  kPublicLands,
  kCulture,
  kPresidencyAction,
  kUnknown,
};

inline constexpr std::size_t kPolicyTopicCount = 21;

const std::array<Topic, kPolicyTopicCount>& PolicyTopics();
std::string_view TopicCode(Topic t);
// Any of the 23 codes.
std::optional<Topic> ParseTopic(std::string_view code);
bool IsPolicyTopic(Topic t);

// Keywords per policy topic, case-folded. A token hits a topic when it
// starts with one of the topic's keywords (German compounds: "haushalt"
// hits "Haushaltsplan"); each token counts at most once per topic.
class Lexicon {
 public:
  // "code<TAB>kw1,kw2,..." per line; '#' comments. Unknown or repeated
  // codes and keywords containing spaces are errors. Topics without a line
  // have no keywords.
  static Lexicon FromStream(std::istream& in);
  static Lexicon FromFile(const std::filesystem::path& path);

  const std::vector<std::string>& Keywords(Topic t) const;
  void Set(Topic t, std::vector<std::string> keywords);

  // Hit count per policy topic for `text`.
  std::array<std::size_t, kPolicyTopicCount> Count(std::string_view text) const;

 private:
  std::array<std::vector<std::string>, kPolicyTopicCount> keywords_;
};

// President -> presidency_action; otherwise the topic with most hits over
// the whole speech (ties by declaration order); no hits -> unknown.
Topic ClassifyBaseline(const corpus::SpeechContribution& contribution,
                       const Lexicon& lexicon);

// External classifier contract:
//   POST <path> {"text": "<whole speech>"}  ->  {"topic": "<policy code>"}
// Only the 21 policy codes are valid answers.
class TopicClient {
 public:
  explicit TopicClient(net::Endpoint endpoint) : endpoint_(std::move(endpoint)) {}

  // Presidency actions never reach the endpoint. TransportError on network
  // failure, ProtocolError for anything outside the contract.
  Topic Classify(const corpus::SpeechContribution& contribution) const;

 private:
  net::Endpoint endpoint_;
};

inline Topic ClassifyExternal(const corpus::SpeechContribution& contribution,
                              const net::Endpoint& endpoint) {
  return TopicClient(endpoint).Classify(contribution);
}

struct TopicAssignment {
  int legislative_period = 0;
  int session_number = 0;
  std::size_t contribution = 0;
  Topic topic = Topic::kUnknown;

  bool operator==(const TopicAssignment&) const = default;
};

void WriteTopics(std::ostream& out, const std::vector<TopicAssignment>& topics);
std::vector<TopicAssignment> ReadTopics(std::istream& in);

}  // namespace cto::topics

#endif  // CTO_TOPICS_TOPICS_H_
