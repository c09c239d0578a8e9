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

#ifndef CTO_STATS_VARIABLES_H_
#define CTO_STATS_VARIABLES_H_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace cto::stats {

enum class Variable {
  kPresidentName,
  kPresidentGender,
  kPresidentParty,
  kPcoName,
  kPcoGender,
  kPcoParty,
  kPcoAffiliation,  // coalition | opposition
  kCause,
  kLp,
  kDate,
  kYear,
  kSessionNumber,
  kAgendaPosition,
  kTopic,
  kHasCto,  // contribution-level: "yes" | "no"
};

inline constexpr std::size_t kVariableCount = 15;

std::string_view VariableName(Variable v);
std::optional<Variable> ParseVariable(std::string_view name);

// Variables describing the person called to order. Tables over them only
// see records whose person was disambiguated.
bool IsPcoVariable(Variable v);

// One unit of analysis: an annotated event or a speech contribution. A
// variable without a value keeps the record out of any table using it.
struct AnalysisRecord {
  std::string id;
  std::array<std::optional<std::string>, kVariableCount> values;

  const std::optional<std::string>& Get(Variable v) const {
    return values[static_cast<std::size_t>(v)];
  }
  AnalysisRecord& Set(Variable v, std::string value) {
    values[static_cast<std::size_t>(v)] = std::move(value);
    return *this;
  }
};

}  // namespace cto::stats

#endif  // CTO_STATS_VARIABLES_H_
