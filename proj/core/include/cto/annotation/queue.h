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

#ifndef CTO_ANNOTATION_QUEUE_H_
#define CTO_ANNOTATION_QUEUE_H_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "cto/annotation/store.h"
#include "cto/annotation/types.h"
#include "cto/detect/rules.h"
#include "cto/mentions/extractor.h"
#include "cto/registry/disambiguation.h"

namespace cto::annotation {

struct Progress {
  std::size_t pending = 0;
  std::size_t resolved = 0;
  std::size_t rejected = 0;
};

// Reasons an event needs a human, before looking at existing annotations:
//   no cause                           -> needs_cause
//   no mention                         -> needs_person
//   several mentions                   -> multiple_persons
//   ambiguous or unmatched resolution  -> needs_person
//   Rule 2 match with "rufe..." only after "zur Ordnung"
//                                      -> review_false_positive
std::set<Reason> RequiredReasons(const detect::CtoEvent& event,
                                 const mentions::ExtractionOutcome& extraction,
                                 const std::optional<registry::Resolution>& resolution,
                                 const detect::RuleMatcher& matcher);

// Pending work derived from detected events and the annotation store. Not
// synchronized; callers serialize writes (see ApiServer).
class AnnotationQueue {
 public:
  AnnotationQueue() = default;
  explicit AnnotationQueue(AnnotationStore store) : store_(std::move(store)) {}
  AnnotationQueue(AnnotationStore store, detect::RuleMatcher matcher)
      : store_(std::move(store)), matcher_(std::move(matcher)) {}

  // Registers the event and returns its queue item, or nullopt when
  // existing annotations already settle every reason. Enqueuing a known
  // event is a no-op that returns its current item (if any).
  std::optional<QueueItem> Enqueue(
      const detect::CtoEvent& event,
      const mentions::ExtractionOutcome& extraction,
      const std::optional<registry::Resolution>& resolution,
      ItemContext context = {});

  // Appends `record` for the queued item `item`. Throws NotFoundError for an
  // unknown item and ValidationError for invalid records (or a record for a
  // different event). Returns the item if reasons remain.
  std::optional<QueueItem> Apply(const detect::EventRef& item,
                                 AnnotationRecord record);

  const QueueItem* Find(const detect::EventRef& ref) const;
  // Pending items ordered by (LP, session, contribution, sentence).
  std::vector<const QueueItem*> Items() const;
  std::size_t size() const { return pending_.size(); }

  Progress progress() const;

  // Number of registered events whose reasons are not all addressed,
  // recomputed from the log instead of the incremental view.
  std::size_t RecountPending() const;

  const AnnotationStore& store() const { return store_; }
  AnnotationStore& mutable_store() { return store_; }
  const std::map<detect::EventRef, std::set<Reason>>& required() const {
    return required_;
  }

 private:
  AnnotationStore store_;
  detect::RuleMatcher matcher_;
  std::map<detect::EventRef, std::set<Reason>> required_;
  std::map<detect::EventRef, QueueItem> pending_;
};

}  // namespace cto::annotation

#endif  // CTO_ANNOTATION_QUEUE_H_
