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

#include "cto/annotation/types.h"

#include <chrono>
#include <cstdio>
#include <ctime>

#include "cto/error.h"

namespace cto::annotation {

std::string_view CauseName(CauseLabel c) {
  switch (c) {
    case CauseLabel::kITO: return "ITO";
    case CauseLabel::kGI: return "GI";
    case CauseLabel::kNV: return "NV";
    case CauseLabel::kNDV: return "NDV";
    case CauseLabel::kMISC: return "MISC";
  }
  return "MISC";
}

std::optional<CauseLabel> ParseCause(std::string_view name) {
  for (CauseLabel c : kAllCauses) {
    if (CauseName(c) == name) return c;
  }
  return std::nullopt;
}

std::string_view OverrideName(StatusOverride s) {
  return s == StatusOverride::kConfirmed ? "confirmed" : "rejected";
}

std::optional<StatusOverride> ParseOverride(std::string_view name) {
  if (name == "confirmed") return StatusOverride::kConfirmed;
  if (name == "rejected") return StatusOverride::kRejected;
  return std::nullopt;
}

std::string_view ReasonName(Reason r) {
  switch (r) {
    case Reason::kNeedsCause: return "needs_cause";
    case Reason::kNeedsPerson: return "needs_person";
    case Reason::kMultiplePersons: return "multiple_persons";
    case Reason::kReviewFalsePositive: return "review_false_positive";
  }
  return "needs_cause";
}

std::optional<Reason> ParseReason(std::string_view name) {
  for (Reason r : {Reason::kNeedsCause, Reason::kNeedsPerson,
                   Reason::kMultiplePersons, Reason::kReviewFalsePositive}) {
    if (ReasonName(r) == name) return r;
  }
  return std::nullopt;
}

bool IsValidTimestamp(std::string_view ts) {
  // YYYY-MM-DDTHH:MM:SSZ
  if (ts.size() != 20) return false;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const char c = ts[i];
    switch (i) {
      case 4: case 7: if (c != '-') return false; break;
      case 10: if (c != 'T') return false; break;
      case 13: case 16: if (c != ':') return false; break;
      case 19: if (c != 'Z') return false; break;
      default: if (c < '0' || c > '9') return false;
    }
  }
  auto num = [&](std::size_t off, std::size_t len) {
    int v = 0;
    for (std::size_t i = off; i < off + len; ++i) v = v * 10 + (ts[i] - '0');
    return v;
  };
  const std::chrono::year_month_day date{
      std::chrono::year{num(0, 4)},
      std::chrono::month{static_cast<unsigned>(num(5, 2))},
      std::chrono::day{static_cast<unsigned>(num(8, 2))}};
  return date.ok() && num(11, 2) < 24 && num(14, 2) < 60 && num(17, 2) < 61;
}

std::string CurrentTimestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void AnnotationRecord::Validate() const {
  if (!cause && !resolved_member && !status) {
    throw ValidationError(
        "empty-record: one of cause, resolved_member or status is required");
  }
  if (status == StatusOverride::kRejected && cause) {
    throw ValidationError(
        "rejected-with-cause: a rejected event must not carry a cause label");
  }
  if (resolved_member && resolved_member->empty()) {
    throw ValidationError("resolved_member: must not be empty");
  }
  if (annotator.empty()) {
    throw ValidationError("annotator: must not be empty");
  }
  if (!IsValidTimestamp(timestamp)) {
    throw ValidationError("timestamp: expected YYYY-MM-DDTHH:MM:SSZ, got '" +
                          timestamp + "'");
  }
}

bool Addresses(const EventState& state, Reason reason) {
  if (state.rejected()) return true;
  switch (reason) {
    case Reason::kNeedsCause:
      return state.cause.has_value();
    case Reason::kNeedsPerson:
    case Reason::kMultiplePersons:
      return state.resolved_member.has_value();
    case Reason::kReviewFalsePositive:
      return state.status == StatusOverride::kConfirmed;
  }
  return false;
}

}  // namespace cto::annotation
