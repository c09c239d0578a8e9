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

#include "cto/detect/detector.h"

#include <charconv>

#include "common/json_util.h"
#include "cto/error.h"

namespace cto::detect {

using jsonutil::Json;

std::string EventRef::ToString() const {
  return std::to_string(legislative_period) + "-" +
         std::to_string(session_number) + "-" + std::to_string(contribution) +
         "-" + std::to_string(sentence);
}

std::optional<EventRef> EventRef::Parse(std::string_view id) {
  long long parts[4];
  std::size_t pos = 0;
  for (int i = 0; i < 4; ++i) {
    const std::size_t dash = i < 3 ? id.find('-', pos) : id.size();
    if (dash == std::string_view::npos || dash == pos) return std::nullopt;
    auto [ptr, ec] = std::from_chars(id.data() + pos, id.data() + dash, parts[i]);
    if (ec != std::errc{} || ptr != id.data() + dash || parts[i] < 0) {
      return std::nullopt;
    }
    pos = dash + 1;
  }
  if (parts[0] <= 0 || parts[1] <= 0) return std::nullopt;
  return EventRef{static_cast<int>(parts[0]), static_cast<int>(parts[1]),
                  static_cast<std::size_t>(parts[2]),
                  static_cast<std::size_t>(parts[3])};
}

std::string_view StatusName(EventStatus status) {
  switch (status) {
    case EventStatus::kAuto:
      return "auto";
    case EventStatus::kConfirmed:
      return "confirmed";
    case EventStatus::kRejected:
      return "rejected";
  }
  return "auto";
}

std::optional<EventStatus> ParseStatus(std::string_view name) {
  if (name == "auto") return EventStatus::kAuto;
  if (name == "confirmed") return EventStatus::kConfirmed;
  if (name == "rejected") return EventStatus::kRejected;
  return std::nullopt;
}

std::vector<CtoEvent> Detect(const corpus::Protocol& protocol,
                             const RuleMatcher& matcher) {
  std::vector<CtoEvent> events;
  std::optional<std::size_t> last_non_president;
  for (const auto& c : protocol.contributions) {
    if (!c.is_president()) {
      last_non_president = c.index;
      continue;
    }
    for (const auto& s : c.sentences) {
      auto rule = matcher.Match(s.text);
      if (!rule) continue;
      CtoEvent e;
      e.protocol = protocol.ref;
      e.contribution_index = c.index;
      e.sentence_index = s.index;
      e.matched_rule = *rule;
      e.matched_sentence = s.text;
      e.trigger_contribution_index = last_non_president;
      events.push_back(std::move(e));
    }
  }
  return events;
}

std::vector<CtoEvent> Detect(const corpus::Protocol& protocol) {
  static const RuleMatcher kDefault;
  return Detect(protocol, kDefault);
}

void WriteEvents(std::ostream& out, const std::vector<CtoEvent>& events) {
  for (const auto& e : events) {
    Json j;
    j["id"] = e.ref().ToString();
    j["lp"] = e.protocol.legislative_period;
    j["session"] = e.protocol.session_number;
    j["date"] = corpus::FormatDate(e.protocol.date);
    j["contribution"] = e.contribution_index;
    j["sentence"] = e.sentence_index;
    j["rule"] = RuleName(e.matched_rule);
    j["sentence_text"] = e.matched_sentence;
    j["trigger_contribution"] = e.trigger_contribution_index
                                    ? Json(*e.trigger_contribution_index)
                                    : Json(nullptr);
    j["status"] = StatusName(e.status);
    out << jsonutil::Dump(j) << '\n';
  }
}

std::vector<CtoEvent> ReadEvents(std::istream& in) {
  std::vector<CtoEvent> events;
  const auto records = jsonutil::ReadLines(in);
  for (std::size_t r = 0; r < records.size(); ++r) {
    const Json& j = records[r];
    try {
      CtoEvent e;
      e.protocol.legislative_period = jsonutil::Get<int>(j, "lp");
      e.protocol.session_number = jsonutil::Get<int>(j, "session");
      auto date = corpus::ParseDate(jsonutil::Get<std::string>(j, "date"));
      if (!date) throw SchemaError("date");
      e.protocol.date = *date;
      e.contribution_index = jsonutil::Get<std::size_t>(j, "contribution");
      e.sentence_index = jsonutil::Get<std::size_t>(j, "sentence");
      auto rule = ParseRuleName(jsonutil::Get<std::string>(j, "rule"));
      if (!rule) throw SchemaError("rule");
      e.matched_rule = *rule;
      e.matched_sentence = jsonutil::Get<std::string>(j, "sentence_text");
      e.trigger_contribution_index =
          jsonutil::GetOptional<std::size_t>(j, "trigger_contribution");
      auto status = ParseStatus(jsonutil::Get<std::string>(j, "status"));
      if (!status) throw SchemaError("status");
      e.status = *status;
      events.push_back(std::move(e));
    } catch (const SchemaError& e) {
      throw SchemaError(e.field(),
                        "event record " + std::to_string(r) + ": " + e.what());
    }
  }
  return events;
}

}  // namespace cto::detect
