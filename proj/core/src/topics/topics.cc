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

#include <algorithm>
#include <fstream>

#include "common/json_util.h"
#include "cto/error.h"
#include "cto/text/utf8.h"

namespace cto::topics {

using jsonutil::Json;

namespace {

constexpr std::array<std::string_view, 23> kCodes = {
    "macroeconomics",
    "civil_rights",
    "health",
    "agriculture",
    "labor",
    "education",
    "environment",
    "energy",
    "immigration",
    "transportation",
    "law_and_crime",
    "social_welfare",
    "housing",
    "domestic_commerce",
    "defense",
    "technology",
    "foreign_trade",
    "international_affairs",
    "government_operations",
    "public_lands",
    "culture",
    "presidency_action",
    "unknown",
};

}  // namespace

const std::array<Topic, kPolicyTopicCount>& PolicyTopics() {
  static const auto kTopics = [] {
    std::array<Topic, kPolicyTopicCount> out{};
    for (std::size_t i = 0; i < kPolicyTopicCount; ++i) {
      out[i] = static_cast<Topic>(i);
    }
    return out;
  }();
  return kTopics;
}

std::string_view TopicCode(Topic t) {
  return kCodes[static_cast<std::size_t>(t)];
}

std::optional<Topic> ParseTopic(std::string_view code) {
  for (std::size_t i = 0; i < kCodes.size(); ++i) {
    if (kCodes[i] == code) return static_cast<Topic>(i);
  }
  return std::nullopt;
}

bool IsPolicyTopic(Topic t) {
  return static_cast<std::size_t>(t) < kPolicyTopicCount;
}

Lexicon Lexicon::FromStream(std::istream& in) {
  Lexicon lex;
  std::array<bool, kPolicyTopicCount> seen{};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (text::NormalizeWhitespace(line).empty() || line[0] == '#') continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ParseError("lexicon line needs code<TAB>keywords", line_no, 1);
    }
    const std::string code = text::NormalizeWhitespace(line.substr(0, tab));
    auto topic = ParseTopic(code);
    if (!topic || !IsPolicyTopic(*topic)) {
      throw ParseError("unknown topic code '" + code + "'", line_no, 1);
    }
    const auto idx = static_cast<std::size_t>(*topic);
    if (seen[idx]) {
      throw ParseError("topic '" + code + "' listed twice", line_no, 1);
    }
    seen[idx] = true;
    std::vector<std::string> keywords;
    std::string_view rest = std::string_view(line).substr(tab + 1);
    std::size_t start = 0;
    while (start <= rest.size()) {
      std::size_t end = rest.find(',', start);
      if (end == std::string_view::npos) end = rest.size();
      std::string kw = text::NormalizeWhitespace(rest.substr(start, end - start));
      if (kw.find(' ') != std::string::npos) {
        throw ParseError("keyword '" + kw + "' contains a space", line_no,
                         tab + 2 + start);
      }
      if (!kw.empty()) keywords.push_back(text::FoldCase(kw));
      start = end + 1;
    }
    lex.keywords_[idx] = std::move(keywords);
  }
  return lex;
}

Lexicon Lexicon::FromFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open lexicon " + path.string());
  return FromStream(in);
}

const std::vector<std::string>& Lexicon::Keywords(Topic t) const {
  static const std::vector<std::string> kEmpty;
  if (!IsPolicyTopic(t)) return kEmpty;
  return keywords_[static_cast<std::size_t>(t)];
}

void Lexicon::Set(Topic t, std::vector<std::string> keywords) {
  if (!IsPolicyTopic(t)) {
    throw ValidationError("only policy topics carry keywords");
  }
  for (auto& k : keywords) k = text::FoldCase(k);
  keywords_[static_cast<std::size_t>(t)] = std::move(keywords);
}

std::array<std::size_t, kPolicyTopicCount> Lexicon::Count(
    std::string_view text_in) const {
  std::array<std::size_t, kPolicyTopicCount> hits{};
  for (const auto& token : text::Tokenize(text_in)) {
    const std::string folded = text::FoldCase(token.text);
    for (std::size_t t = 0; t < kPolicyTopicCount; ++t) {
      const auto& kws = keywords_[t];
      if (std::any_of(kws.begin(), kws.end(), [&](const std::string& kw) {
            return folded.starts_with(kw);
          })) {
        ++hits[t];
      }
    }
  }
  return hits;
}

Topic ClassifyBaseline(const corpus::SpeechContribution& contribution,
                       const Lexicon& lexicon) {
  if (contribution.is_president()) return Topic::kPresidencyAction;
  const auto hits = lexicon.Count(contribution.raw_text);
  std::size_t best = 0;
  for (std::size_t t = 1; t < kPolicyTopicCount; ++t) {
    if (hits[t] > hits[best]) best = t;
  }
  if (hits[best] == 0) return Topic::kUnknown;
  return static_cast<Topic>(best);
}

Topic TopicClient::Classify(
    const corpus::SpeechContribution& contribution) const {
  if (contribution.is_president()) return Topic::kPresidencyAction;
  const std::string body =
      net::PostJson(endpoint_, Json{{"text", contribution.raw_text}}.dump());
  Json answer;
  try {
    answer = Json::parse(body);
  } catch (const Json::parse_error&) {
    throw ProtocolError("topic classifier response is not JSON");
  }
  if (!answer.is_object() || !answer.contains("topic") ||
      !answer["topic"].is_string()) {
    throw ProtocolError("topic classifier response needs a \"topic\" string");
  }
  const std::string code = answer["topic"].get<std::string>();
  auto topic = ParseTopic(code);
  if (!topic || !IsPolicyTopic(*topic)) {
    throw ProtocolError("topic classifier returned unknown label '" + code + "'");
  }
  return *topic;
}

void WriteTopics(std::ostream& out, const std::vector<TopicAssignment>& topics) {
  for (const auto& t : topics) {
    Json j;
    j["lp"] = t.legislative_period;
    j["session"] = t.session_number;
    j["contribution"] = t.contribution;
    j["topic"] = TopicCode(t.topic);
    out << jsonutil::Dump(j) << '\n';
  }
}

std::vector<TopicAssignment> ReadTopics(std::istream& in) {
  std::vector<TopicAssignment> out;
  const auto records = jsonutil::ReadLines(in);
  for (std::size_t i = 0; i < records.size(); ++i) {
    const Json& j = records[i];
    try {
      TopicAssignment t;
      t.legislative_period = jsonutil::Get<int>(j, "lp");
      t.session_number = jsonutil::Get<int>(j, "session");
      t.contribution = jsonutil::Get<std::size_t>(j, "contribution");
      auto topic = ParseTopic(jsonutil::Get<std::string>(j, "topic"));
      if (!topic) throw SchemaError("topic");
      t.topic = *topic;
      out.push_back(t);
    } catch (const SchemaError& e) {
      throw SchemaError(e.field(),
                        "topic record " + std::to_string(i) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace cto::topics
