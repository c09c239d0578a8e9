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

#include "cto/annotation/queue.h"

#include "cto/error.h"

namespace cto::annotation {

namespace {

std::set<Reason> Open(const std::set<Reason>& required, const EventState& state) {
  std::set<Reason> open;
  for (Reason r : required) {
    if (!Addresses(state, r)) open.insert(r);
  }
  return open;
}

}  // namespace

std::set<Reason> RequiredReasons(
    const detect::CtoEvent& event, const mentions::ExtractionOutcome& extraction,
    const std::optional<registry::Resolution>& resolution,
    const detect::RuleMatcher& matcher) {
  std::set<Reason> reasons = {Reason::kNeedsCause};
  switch (extraction.disposition) {
    case mentions::Disposition::kNone:
      reasons.insert(Reason::kNeedsPerson);
      break;
    case mentions::Disposition::kMultiple:
      reasons.insert(Reason::kMultiplePersons);
      break;
    case mentions::Disposition::kSingle:
      if (!resolution ||
          resolution->kind != registry::ResolutionKind::kResolved) {
        reasons.insert(Reason::kNeedsPerson);
      }
      break;
  }
  if (event.matched_rule == detect::MatchedRule::kRule2 &&
      matcher.IsAtypicalRule2(event.matched_sentence)) {
    reasons.insert(Reason::kReviewFalsePositive);
  }
  return reasons;
}

std::optional<QueueItem> AnnotationQueue::Enqueue(
    const detect::CtoEvent& event, const mentions::ExtractionOutcome& extraction,
    const std::optional<registry::Resolution>& resolution,
    ItemContext context) {
  const detect::EventRef ref = event.ref();
  if (required_.count(ref)) {
    if (const QueueItem* item = Find(ref)) return *item;
    return std::nullopt;
  }
  const auto required = RequiredReasons(event, extraction, resolution, matcher_);
  required_.emplace(ref, required);
  auto open = Open(required, store_.StateOf(ref));
  if (open.empty()) return std::nullopt;
  QueueItem item{event, std::move(open), std::move(context)};
  pending_.emplace(ref, item);
  return item;
}

std::optional<QueueItem> AnnotationQueue::Apply(const detect::EventRef& item,
                                                AnnotationRecord record) {
  auto it = pending_.find(item);
  if (it == pending_.end()) {
    throw NotFoundError("no pending queue item " + item.ToString());
  }
  if (record.event != item) {
    throw ValidationError("event: record is for " + record.event.ToString() +
                          ", not " + item.ToString());
  }
  store_.Append(std::move(record));
  it->second.reasons = Open(required_.at(item), store_.StateOf(item));
  if (it->second.reasons.empty()) {
    pending_.erase(it);
    return std::nullopt;
  }
  return it->second;
}

const QueueItem* AnnotationQueue::Find(const detect::EventRef& ref) const {
  auto it = pending_.find(ref);
  return it == pending_.end() ? nullptr : &it->second;
}

std::vector<const QueueItem*> AnnotationQueue::Items() const {
  std::vector<const QueueItem*> out;
  out.reserve(pending_.size());
  for (const auto& [ref, item] : pending_) out.push_back(&item);
  return out;
}

Progress AnnotationQueue::progress() const {
  Progress p;
  p.pending = pending_.size();
  for (const auto& [ref, reasons] : required_) {
    if (store_.StateOf(ref).rejected()) ++p.rejected;
  }
  p.resolved = required_.size() - p.pending - p.rejected;
  return p;
}

std::size_t AnnotationQueue::RecountPending() const {
  const auto state = AnnotationStore::Fold(store_.log());
  std::size_t pending = 0;
  for (const auto& [ref, required] : required_) {
    auto it = state.find(ref);
    const EventState s = it == state.end() ? EventState{} : it->second;
    if (!Open(required, s).empty()) ++pending;
  }
  return pending;
}

}  // namespace cto::annotation
