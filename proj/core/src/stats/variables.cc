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

#include "cto/stats/variables.h"

namespace cto::stats {

namespace {

constexpr std::array<std::string_view, kVariableCount> kNames = {
    "president_name", "president_gender", "president_party", "pco_name",
    "pco_gender",     "pco_party",        "pco_affiliation", "cause",
    "lp",             "date",             "year",            "session_number",
    "agenda_position", "topic",           "has_cto",
};

}  // namespace

std::string_view VariableName(Variable v) {
  return kNames[static_cast<std::size_t>(v)];
}

std::optional<Variable> ParseVariable(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<Variable>(i);
  }
  return std::nullopt;
}

bool IsPcoVariable(Variable v) {
  switch (v) {
    case Variable::kPcoName:
    case Variable::kPcoGender:
    case Variable::kPcoParty:
    case Variable::kPcoAffiliation:
      return true;
    default:
      return false;
  }
}

}  // namespace cto::stats
