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

#ifndef CTO_ANNOTATION_TYPES_H_
#define CTO_ANNOTATION_TYPES_H_

#include <array>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cto/corpus/types.h"
#include "cto/detect/detector.h"

namespace cto::annotation {

// Cause of a call to order.
//   ITO  insult towards an individual
//   GI   general insult (group, party, event, actions)
//   NV   non-verbal action
//   NDV  verbal action that was not transcribed
//   MISC other verbal actions excluding direct insults
enum class CauseLabel { kITO, kGI, kNV, kNDV, kMISC };

inline constexpr std::array<CauseLabel, 5> kAllCauses = {
    CauseLabel::kITO, CauseLabel::kGI, CauseLabel::kNV, CauseLabel::kNDV,
    CauseLabel::kMISC};

std::string_view CauseName(CauseLabel c);
std::optional<CauseLabel> ParseCause(std::string_view name);

enum class StatusOverride { kConfirmed, kRejected };

std::string_view OverrideName(StatusOverride s);
std::optional<StatusOverride> ParseOverride(std::string_view name);

struct AnnotationRecord {
  detect::EventRef event;
  std::optional<CauseLabel> cause;
  std::optional<std::string> resolved_member;
  std::optional<StatusOverride> status;
  std::string annotator;
  std::string timestamp;  // UTC, YYYY-MM-DDTHH:MM:SSZ
  std::optional<std::string> note;

  // Throws ValidationError naming the violated rule:
  //   "empty-record"      none of cause / resolved_member / status present
  //   "rejected-with-cause"
  //   "annotator"         empty annotator
  //   "timestamp"         not in the documented format
  void Validate() const;

  bool operator==(const AnnotationRecord&) const = default;
};

// Current annotation state of one event: a fold over its records.
struct EventState {
  std::optional<CauseLabel> cause;
  std::optional<std::string> resolved_member;
  std::optional<StatusOverride> status;

  bool rejected() const { return status == StatusOverride::kRejected; }
  bool operator==(const EventState&) const = default;
};

enum class Reason {
  kNeedsCause,
  kNeedsPerson,
  kMultiplePersons,
  kReviewFalsePositive
};

std::string_view ReasonName(Reason r);
std::optional<Reason> ParseReason(std::string_view name);

// Material shown to the annotator.
struct ItemContext {
  std::string sentence;
  std::optional<std::string> trigger_speaker;
  std::optional<std::string> trigger_text;
  std::vector<std::string> mentions;       // surfaces
  std::vector<std::string> candidate_ids;  // registry member ids

  bool operator==(const ItemContext&) const = default;
};

struct QueueItem {
  detect::CtoEvent event;
  std::set<Reason> reasons;
  ItemContext context;

  detect::EventRef ref() const { return event.ref(); }
};

// True when the current state settles the reason.
bool Addresses(const EventState& state, Reason reason);

std::string CurrentTimestamp();
bool IsValidTimestamp(std::string_view ts);

}  // namespace cto::annotation

#endif  // CTO_ANNOTATION_TYPES_H_
