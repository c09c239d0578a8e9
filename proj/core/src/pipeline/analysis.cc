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

#include "cto/pipeline/analysis.h"

#include <map>
#include <set>
#include <string>
#include <tuple>

#include "cto/error.h"

namespace cto::pipeline {

using stats::AnalysisRecord;
using stats::Variable;

namespace {

using ContributionKey = std::tuple<int, int, std::size_t>;

std::string Year(const corpus::Date& d) {
  return std::to_string(static_cast<int>(d.year()));
}

void SetProtocolVariables(AnalysisRecord& rec, const corpus::ProtocolRef& ref) {
  rec.Set(Variable::kLp, std::to_string(ref.legislative_period))
      .Set(Variable::kDate, corpus::FormatDate(ref.date))
      .Set(Variable::kYear, Year(ref.date))
      .Set(Variable::kSessionNumber, std::to_string(ref.session_number));
}

// "unknown" is reported by the classify stage but kept out of the tables.
void SetTopic(AnalysisRecord& rec,
              const std::map<ContributionKey, topics::Topic>& topic_of,
              const ContributionKey& key) {
  auto it = topic_of.find(key);
  if (it == topic_of.end() || it->second == topics::Topic::kUnknown) return;
  rec.Set(Variable::kTopic, std::string(topics::TopicCode(it->second)));
}

}  // namespace

AnalysisData BuildAnalysisData(const AnalysisInputs& in) {
  if (!in.corpus || !in.events || !in.resolutions || !in.topics || !in.store ||
      !in.registry || !in.aliases || !in.coalitions) {
    throw ValidationError("analysis inputs incomplete");
  }
  std::map<ContributionKey, const corpus::SpeechContribution*> contributions;
  std::map<std::pair<int, int>, const corpus::Protocol*> protocols;
  for (const auto& p : *in.corpus) {
    protocols[{p.ref.legislative_period, p.ref.session_number}] = &p;
    for (const auto& c : p.contributions) {
      contributions[{p.ref.legislative_period, p.ref.session_number, c.index}] = &c;
    }
  }
  std::map<ContributionKey, topics::Topic> topic_of;
  for (const auto& t : *in.topics) {
    topic_of[{t.legislative_period, t.session_number, t.contribution}] = t.topic;
  }
  std::map<detect::EventRef, const registry::Resolution*> resolution_of;
  for (const auto& r : *in.resolutions) resolution_of[r.event] = &r;

  const registry::Disambiguator speakers(*in.registry, *in.aliases);
  const auto& state = in.store->state();

  AnalysisData out;
  std::set<ContributionKey> triggers;
  for (const auto& ev : *in.events) {
    const detect::EventRef ref = ev.ref();
    annotation::EventState st;
    if (auto it = state.find(ref); it != state.end()) st = it->second;
    if (st.rejected()) {
      ++out.rejected;
      continue;
    }
    if (!st.cause) {
      ++out.unannotated;
      continue;
    }
    const int lp = ev.protocol.legislative_period;
    AnalysisRecord rec;
    rec.id = ref.ToString();
    SetProtocolVariables(rec, ev.protocol);
    rec.Set(Variable::kCause, std::string(annotation::CauseName(*st.cause)));

    const ContributionKey own{lp, ev.protocol.session_number,
                              ev.contribution_index};
    if (auto it = contributions.find(own); it != contributions.end()) {
      const auto& pres = *it->second;
      rec.Set(Variable::kPresidentName, pres.speaker_name);
      rec.Set(Variable::kAgendaPosition, std::to_string(pres.agenda_position));
      const registry::MemberRecord* member =
          speakers.ResolveSpeaker(pres.speaker_name, pres.speaker_party, lp);
      if (member) {
        rec.Set(Variable::kPresidentGender,
                std::string(registry::GenderName(member->gender)));
      }
      std::optional<std::string> party =
          member ? member->PartyIn(lp) : std::nullopt;
      if (!party) party = pres.speaker_party;
      if (party) rec.Set(Variable::kPresidentParty, *party);
    }
    if (ev.trigger_contribution_index) {
      const ContributionKey trig{lp, ev.protocol.session_number,
                                 *ev.trigger_contribution_index};
      triggers.insert(trig);
      SetTopic(rec, topic_of, trig);
    }

    std::optional<std::string> pco = st.resolved_member;
    if (!pco) {
      if (auto it = resolution_of.find(ref); it != resolution_of.end()) {
        pco = it->second->member_id();
      }
    }
    if (pco) {
      if (const auto* m = in.registry->Find(*pco)) {
        rec.Set(Variable::kPcoName, m->member_id);
        rec.Set(Variable::kPcoGender, std::string(registry::GenderName(m->gender)));
        if (auto party = m->PartyIn(lp)) {
          rec.Set(Variable::kPcoParty, *party);
          if (auto coalition = in.coalitions->IsCoalition(lp, *party)) {
            rec.Set(Variable::kPcoAffiliation,
                    *coalition ? "coalition" : "opposition");
          }
        }
      }
    }
    out.events.push_back(std::move(rec));
  }

  for (const auto& [key, c] : contributions) {
    const auto& [lp, session, index] = key;
    AnalysisRecord rec;
    rec.id = std::to_string(lp) + "-" + std::to_string(session) + "-" +
             std::to_string(index);
    SetProtocolVariables(rec, protocols.at({lp, session})->ref);
    rec.Set(Variable::kAgendaPosition, std::to_string(c->agenda_position));
    SetTopic(rec, topic_of, key);
    rec.Set(Variable::kHasCto, triggers.count(key) ? "yes" : "no");
    out.contributions.push_back(std::move(rec));
  }
  return out;
}

}  // namespace cto::pipeline
