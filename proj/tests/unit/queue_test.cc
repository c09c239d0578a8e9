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

#include <gtest/gtest.h>

#include <random>

#include "cto/error.h"
#include "support/random_log.h"

namespace cto::annotation {
namespace {

using mentions::Disposition;
using registry::ResolutionKind;

detect::CtoEvent Event(detect::EventRef ref, std::string sentence,
                       detect::MatchedRule rule = detect::MatchedRule::kRule2) {
  detect::CtoEvent e;
  e.protocol.legislative_period = ref.legislative_period;
  e.protocol.session_number = ref.session_number;
  e.contribution_index = ref.contribution;
  e.sentence_index = ref.sentence;
  e.matched_rule = rule;
  e.matched_sentence = std::move(sentence);
  return e;
}

mentions::ExtractionOutcome Outcome(const detect::CtoEvent& e, std::size_t mentions) {
  mentions::ExtractionOutcome o;
  o.event = e.ref();
  o.mentions.resize(mentions);
  for (auto& m : o.mentions) m.surface = "Name";
  o.disposition = mentions::DispositionFor(mentions);
  return o;
}

registry::Resolution Resolved(const detect::CtoEvent& e) {
  return {e.ref(), ResolutionKind::kResolved, {"11000010"}, registry::ResolutionMethod::kAuto};
}

AnnotationRecord Rec(detect::EventRef ref) {
  AnnotationRecord r;
  r.event = ref;
  r.annotator = "anna";
  r.timestamp = "2024-06-11T10:00:00Z";
  return r;
}

TEST(QueueTest, ResolvedPersonNeedsCauseOnly) {
  AnnotationQueue q;
  const auto e = Event({19, 1, 2, 0}, "Ich rufe den Abgeordneten Müller zur Ordnung.");
  const auto item = q.Enqueue(e, Outcome(e, 1), Resolved(e));
  ASSERT_TRUE(item);
  EXPECT_EQ(item->reasons, std::set<Reason>{Reason::kNeedsCause});
}

TEST(QueueTest, NoMentionNeedsPerson) {
  AnnotationQueue q;
  const auto e = Event({19, 1, 2, 0}, "Ich rufe Sie zur Ordnung.");
  const auto item = q.Enqueue(e, Outcome(e, 0), std::nullopt);
  ASSERT_TRUE(item);
  EXPECT_EQ(item->reasons, (std::set<Reason>{Reason::kNeedsCause, Reason::kNeedsPerson}));
}

TEST(QueueTest, MultipleAndAmbiguous) {
  AnnotationQueue q;
  const auto a = Event({19, 1, 2, 0}, "Ich rufe die Abgeordneten Schmidt und Meyer zur Ordnung.");
  EXPECT_EQ(q.Enqueue(a, Outcome(a, 2), std::nullopt)->reasons,
            (std::set<Reason>{Reason::kNeedsCause, Reason::kMultiplePersons}));
  const auto b = Event({19, 1, 3, 0}, "Ich rufe Herrn Müller zur Ordnung.");
  registry::Resolution amb{b.ref(), ResolutionKind::kAmbiguous, {"1", "2"}, {}};
  EXPECT_EQ(q.Enqueue(b, Outcome(b, 1), amb)->reasons,
            (std::set<Reason>{Reason::kNeedsCause, Reason::kNeedsPerson}));
  const auto c = Event({19, 1, 4, 0}, "Ich rufe Herrn Meyer zur Ordnung.");
  registry::Resolution none{c.ref(), ResolutionKind::kUnmatched, {}, {}};
  EXPECT_EQ(q.Enqueue(c, Outcome(c, 1), none)->reasons,
            (std::set<Reason>{Reason::kNeedsCause, Reason::kNeedsPerson}));
}

TEST(QueueTest, AtypicalRuleTwoNeedsReview) {
  AnnotationQueue q;
  const auto e = Event({19, 15, 2, 0},
                       "Ich kann nur wegen der Zwischenrufe zur Ordnung rufen, die ich selber höre.");
  EXPECT_EQ(q.Enqueue(e, Outcome(e, 0), std::nullopt)->reasons,
            (std::set<Reason>{Reason::kNeedsCause, Reason::kNeedsPerson,
                              Reason::kReviewFalsePositive}));
}

TEST(QueueTest, FullyAnnotatedEventIsNotQueued) {
  AnnotationStore store;
  const auto e = Event({19, 1, 2, 0}, "Ich rufe Sie zur Ordnung.");
  auto r = Rec(e.ref());
  r.cause = CauseLabel::kITO;
  r.resolved_member = "11000010";
  store.Append(r);
  AnnotationQueue q(std::move(store));
  EXPECT_FALSE(q.Enqueue(e, Outcome(e, 0), std::nullopt));
  EXPECT_EQ(q.size(), 0u);
  EXPECT_EQ(q.progress().resolved, 1u);
}

TEST(QueueTest, DuplicateEnqueueIsNoOp) {
  AnnotationQueue q;
  const auto e = Event({19, 1, 2, 0}, "Ich rufe Sie zur Ordnung.");
  const auto first = q.Enqueue(e, Outcome(e, 0), std::nullopt);
  // Different extraction the second time: ignored.
  const auto second = q.Enqueue(e, Outcome(e, 1), Resolved(e));
  ASSERT_TRUE(second);
  EXPECT_EQ(second->reasons, first->reasons);
  EXPECT_EQ(q.size(), 1u);
}

TEST(QueueTest, ApplyCauseShrinksQueue) {
  AnnotationQueue q;
  const auto e = Event({19, 1, 2, 0}, "Ich rufe Herrn Müller zur Ordnung.");
  q.Enqueue(e, Outcome(e, 1), Resolved(e));
  auto r = Rec(e.ref());
  r.cause = CauseLabel::kITO;
  EXPECT_FALSE(q.Apply(e.ref(), r));
  EXPECT_EQ(q.size(), 0u);
  EXPECT_EQ(q.progress().resolved, 1u);
}

TEST(QueueTest, PartialAnnotationKeepsItem) {
  AnnotationQueue q;
  const auto e = Event({19, 1, 2, 0}, "Ich rufe Sie zur Ordnung.");
  q.Enqueue(e, Outcome(e, 0), std::nullopt);
  auto r = Rec(e.ref());
  r.resolved_member = "11000010";
  const auto left = q.Apply(e.ref(), r);
  ASSERT_TRUE(left);
  EXPECT_EQ(left->reasons, std::set<Reason>{Reason::kNeedsCause});
  EXPECT_EQ(q.size(), 1u);
}

TEST(QueueTest, RejectionSettlesEverything) {
  AnnotationQueue q;
  const auto e = Event({19, 15, 2, 0},
                       "Ich kann nur wegen der Zwischenrufe zur Ordnung rufen, die ich selber höre.");
  q.Enqueue(e, Outcome(e, 0), std::nullopt);
  auto r = Rec(e.ref());
  r.status = StatusOverride::kRejected;
  EXPECT_FALSE(q.Apply(e.ref(), r));
  EXPECT_TRUE(q.store().StateOf(e.ref()).rejected());
  const auto p = q.progress();
  EXPECT_EQ(p.pending, 0u);
  EXPECT_EQ(p.rejected, 1u);
  EXPECT_EQ(p.resolved, 0u);
}

TEST(QueueTest, ApplyErrors) {
  AnnotationQueue q;
  const auto e = Event({19, 1, 2, 0}, "Ich rufe Sie zur Ordnung.");
  q.Enqueue(e, Outcome(e, 0), std::nullopt);
  auto r = Rec({19, 1, 9, 0});
  r.cause = CauseLabel::kGI;
  EXPECT_THROW(q.Apply({19, 1, 9, 0}, r), NotFoundError);
  EXPECT_THROW(q.Apply(e.ref(), r), ValidationError);  // wrong event
  auto empty = Rec(e.ref());
  EXPECT_THROW(q.Apply(e.ref(), empty), ValidationError);
  EXPECT_EQ(q.store().log().size(), 0u);
  EXPECT_EQ(q.size(), 1u);
}

TEST(QueueTest, ItemsAreOrdered) {
  AnnotationQueue q;
  for (detect::EventRef ref : {detect::EventRef{19, 3, 1, 0}, {18, 9, 4, 0},
                               {19, 1, 7, 2}, {19, 1, 7, 1}}) {
    const auto e = Event(ref, "Ich rufe Sie zur Ordnung.");
    q.Enqueue(e, Outcome(e, 0), std::nullopt);
  }
  std::vector<std::string> ids;
  for (const auto* item : q.Items()) ids.push_back(item->ref().ToString());
  EXPECT_EQ(ids, (std::vector<std::string>{"18-9-4-0", "19-1-7-1", "19-1-7-2", "19-3-1-0"}));
}

// Random interleavings of enqueue and apply (valid or not): the queue size
// always equals the pending count recomputed from the log.
TEST(QueueTest, SizeMatchesRecountUnderRandomOperations) {
  std::mt19937_64 rng(424242);
  for (int sequence = 0; sequence < 1000; ++sequence) {
    const auto failure = testing::RandomQueueSequence(rng);
    ASSERT_FALSE(failure) << "sequence " << sequence << ", " << *failure;
  }
}

TEST(ReasonTest, Names) {
  for (Reason r : {Reason::kNeedsCause, Reason::kNeedsPerson, Reason::kMultiplePersons,
                   Reason::kReviewFalsePositive}) {
    EXPECT_EQ(ParseReason(ReasonName(r)), r);
  }
  EXPECT_EQ(ReasonName(Reason::kReviewFalsePositive), "review_false_positive");
}

}  // namespace
}  // namespace cto::annotation
