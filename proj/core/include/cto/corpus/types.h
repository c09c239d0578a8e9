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

#ifndef CTO_CORPUS_TYPES_H_
#define CTO_CORPUS_TYPES_H_

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cto::corpus {

enum class Role { kPresident, kMember, kOther };

std::string_view RoleName(Role role);
// Accepts the names produced by RoleName plus the protocol attribute
// spellings ("presidency", "mp", ...). Unknown values map to kOther.
Role ParseRole(std::string_view value);

using Date = std::chrono::year_month_day;

// ISO 8601 calendar date (YYYY-MM-DD). Returns nullopt on anything else.
std::optional<Date> ParseDate(std::string_view value);
std::string FormatDate(const Date& date);

struct Sentence {
  std::size_t index = 0;
  std::string text;
  // Byte offsets into the owning contribution's raw_text.
  std::size_t begin = 0;
  std::size_t end = 0;

  bool operator==(const Sentence&) const = default;
};

struct SpeechContribution {
  std::size_t index = 0;  // position within the protocol
  std::string speaker_name;
  std::optional<std::string> speaker_party;  // canonical party code
  Role role = Role::kMember;
  std::size_t agenda_position = 0;
  std::vector<Sentence> sentences;
  std::string raw_text;  // whitespace-normalized

  bool is_president() const { return role == Role::kPresident; }
  bool operator==(const SpeechContribution&) const = default;
};

// Coordinates of one session protocol.
struct ProtocolRef {
  int legislative_period = 0;
  int session_number = 0;
  Date date{};

  bool operator==(const ProtocolRef&) const = default;
  auto operator<=>(const ProtocolRef& o) const {
    if (auto c = legislative_period <=> o.legislative_period; c != 0) return c;
    return session_number <=> o.session_number;
  }
};

struct Protocol {
  ProtocolRef ref;
  std::vector<SpeechContribution> contributions;

  bool operator==(const Protocol&) const = default;
};

}  // namespace cto::corpus

#endif  // CTO_CORPUS_TYPES_H_
