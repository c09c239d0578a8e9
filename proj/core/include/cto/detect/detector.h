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

#ifndef CTO_DETECT_DETECTOR_H_
#define CTO_DETECT_DETECTOR_H_

#include <compare>
#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "cto/corpus/types.h"
#include "cto/detect/rules.h"

namespace cto::detect {

// Stable identity of a call-to-order event: the sentence it was found in.
// Rendered as "LP-SESSION-CONTRIBUTION-SENTENCE", e.g. "19-12-5-1".
struct EventRef {
  int legislative_period = 0;
  int session_number = 0;
  std::size_t contribution = 0;
  std::size_t sentence = 0;

  std::string ToString() const;
  static std::optional<EventRef> Parse(std::string_view id);

  auto operator<=>(const EventRef&) const = default;
};

enum class EventStatus { kAuto, kConfirmed, kRejected };

std::string_view StatusName(EventStatus status);
std::optional<EventStatus> ParseStatus(std::string_view name);

struct CtoEvent {
  corpus::ProtocolRef protocol;
  std::size_t contribution_index = 0;
  std::size_t sentence_index = 0;
  MatchedRule matched_rule = MatchedRule::kRule1;
  std::string matched_sentence;
  // Nearest preceding contribution whose role is not president.
  std::optional<std::size_t> trigger_contribution_index;
  EventStatus status = EventStatus::kAuto;

  EventRef ref() const {
    return {protocol.legislative_period, protocol.session_number,
            contribution_index, sentence_index};
  }
  bool operator==(const CtoEvent&) const = default;
};

// One event per matching sentence of every presidency action.
std::vector<CtoEvent> Detect(const corpus::Protocol& protocol,
                             const RuleMatcher& matcher);
std::vector<CtoEvent> Detect(const corpus::Protocol& protocol);

void WriteEvents(std::ostream& out, const std::vector<CtoEvent>& events);
std::vector<CtoEvent> ReadEvents(std::istream& in);

}  // namespace cto::detect

#endif  // CTO_DETECT_DETECTOR_H_
