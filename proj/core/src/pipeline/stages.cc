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

#include "cto/pipeline/stages.h"

#include <array>
#include <set>

#include "common/json_util.h"
#include "cto/corpus/corpus_io.h"
#include "cto/corpus/protocol_parser.h"
#include "cto/corpus/sentence_splitter.h"
#include "cto/mentions/ner_client.h"
#include "cto/net/endpoint.h"
#include "cto/pipeline/analysis.h"
#include "cto/stats/contingency.h"
#include "cto/topics/topics.h"
#include "inputs.h"
#include "report.h"

namespace cto::pipeline {

using jsonutil::Json;
using namespace internal;

namespace {

constexpr std::array<std::string_view, 8> kStageNames = {
    "ingest", "detect", "extract", "disambiguate",
    "classify", "serve", "stats", "report"};

std::vector<corpus::Protocol> ReadCorpusArtifact(const PipelineConfig& c) {
  return ReadArtifact(c, artifact::kCorpus,
                      [](std::istream& in) { return corpus::ReadCorpus(in); });
}

std::vector<detect::CtoEvent> ReadEventsArtifact(const PipelineConfig& c) {
  return ReadArtifact(c, artifact::kEvents,
                      [](std::istream& in) { return detect::ReadEvents(in); });
}

std::vector<mentions::ExtractionOutcome> ReadMentionsArtifact(
    const PipelineConfig& c) {
  return ReadArtifact(c, artifact::kMentions,
                      [](std::istream& in) { return mentions::ReadOutcomes(in); });
}

std::vector<registry::Resolution> ReadResolutionsArtifact(const PipelineConfig& c) {
  return ReadArtifact(c, artifact::kResolutions, [](std::istream& in) {
    return registry::ReadResolutions(in);
  });
}

std::vector<topics::TopicAssignment> ReadTopicsArtifact(const PipelineConfig& c) {
  return ReadArtifact(c, artifact::kTopics,
                      [](std::istream& in) { return topics::ReadTopics(in); });
}

std::string Summary(Json j) { return jsonutil::Dump(j); }

StageResult RunIngest(const PipelineConfig& c) {
  const auto rules = LoadRules(c);
  corpus::ProtocolParser parser(LoadAliases(c),
                                corpus::SentenceSplitter(rules.abbreviations));
  const auto protocols = corpus::ParseCorpus(c.corpus_path, parser, c.threads);
  std::size_t contributions = 0, president = 0, sentences = 0;
  for (const auto& p : protocols) {
    contributions += p.contributions.size();
    for (const auto& s : p.contributions) {
      if (s.is_president()) ++president;
      sentences += s.sentences.size();
    }
  }
  WriteArtifact(c, artifact::kCorpus,
                [&](std::ostream& out) { corpus::WriteCorpus(out, protocols); });
  return {Summary({{"stage", "ingest"},
                   {"protocols", protocols.size()},
                   {"contributions", contributions},
                   {"presidency_actions", president},
                   {"sentences", sentences},
                   {"artifacts", {artifact::kCorpus}}}),
          {}};
}

StageResult RunDetect(const PipelineConfig& c) {
  Require(c, {Stage::kIngest});
  const auto protocols = ReadCorpusArtifact(c);
  const detect::RuleMatcher matcher(LoadRules(c));
  std::vector<std::vector<detect::CtoEvent>> per_protocol(protocols.size());
  ParallelFor(protocols.size(), c.threads, [&](std::size_t i) {
    per_protocol[i] = detect::Detect(protocols[i], matcher);
  });
  std::vector<detect::CtoEvent> events;
  std::size_t rule1 = 0;
  for (auto& batch : per_protocol) {
    for (auto& e : batch) {
      if (e.matched_rule == detect::MatchedRule::kRule1) ++rule1;
      events.push_back(std::move(e));
    }
  }
  WriteArtifact(c, artifact::kEvents,
                [&](std::ostream& out) { detect::WriteEvents(out, events); });
  return {Summary({{"stage", "detect"},
                   {"events", events.size()},
                   {"rule1", rule1},
                   {"rule2", events.size() - rule1},
                   {"artifacts", {artifact::kEvents}}}),
          {}};
}

StageResult RunExtract(const PipelineConfig& c) {
  Require(c, {Stage::kIngest, Stage::kDetect});
  const auto events = ReadEventsArtifact(c);
  std::vector<mentions::ExtractionOutcome> outcomes;
  if (c.ner_endpoint) {
    mentions::NerClient client(net::Endpoint::Parse(*c.ner_endpoint));
    outcomes = client.ExtractAll(events, std::max(1u, c.threads));
  } else {
    const mentions::MentionExtractor extractor;
    for (const auto& e : events) outcomes.push_back(extractor.Extract(e));
  }
  std::array<std::size_t, 3> by_disposition{};
  for (const auto& o : outcomes) ++by_disposition[static_cast<int>(o.disposition)];
  WriteArtifact(c, artifact::kMentions,
                [&](std::ostream& out) { mentions::WriteOutcomes(out, outcomes); });
  return {Summary({{"stage", "extract"},
                   {"events", outcomes.size()},
                   {"source", c.ner_endpoint ? "external" : "pattern"},
                   {"single", by_disposition[0]},
                   {"none", by_disposition[1]},
                   {"multiple", by_disposition[2]},
                   {"artifacts", {artifact::kMentions}}}),
          {}};
}

StageResult RunDisambiguate(const PipelineConfig& c) {
  Require(c, {Stage::kIngest, Stage::kDetect, Stage::kExtract});
  const auto protocols = ReadCorpusArtifact(c);
  const auto events = ReadEventsArtifact(c);
  const auto outcomes = ReadMentionsArtifact(c);
  const auto aliases = LoadAliases(c);
  const auto members = LoadMembers(c, aliases);
  const registry::Disambiguator disambiguator(members, aliases);

  std::vector<registry::Resolution> resolutions;
  std::array<std::size_t, 3> by_kind{};
  for (const auto& o : outcomes) {
    if (o.disposition != mentions::Disposition::kSingle) continue;
    auto r = disambiguator.Resolve(o.mentions.front(), o.event.legislative_period);
    r.event = o.event;
    ++by_kind[static_cast<int>(r.kind)];
    resolutions.push_back(std::move(r));
  }
  auto queue = BuildQueue({&protocols, &events, &outcomes, &resolutions},
                          LoadStore(c, members), detect::RuleMatcher(LoadRules(c)));
  WriteArtifact(c, artifact::kResolutions, [&](std::ostream& out) {
    registry::WriteResolutions(out, resolutions);
  });
  WriteArtifact(c, artifact::kQueue,
                [&](std::ostream& out) { WriteQueue(out, queue); });
  const auto progress = queue.progress();
  return {Summary({{"stage", "disambiguate"},
                   {"events", events.size()},
                   {"resolved", by_kind[0]},
                   {"ambiguous", by_kind[1]},
                   {"unmatched", by_kind[2]},
                   {"queue", progress.pending},
                   {"rejected", progress.rejected},
                   {"artifacts", {artifact::kResolutions, artifact::kQueue}}}),
          {}};
}

StageResult RunClassify(const PipelineConfig& c) {
  Require(c, {Stage::kIngest});
  const auto protocols = ReadCorpusArtifact(c);
  std::vector<const corpus::SpeechContribution*> items;
  std::vector<topics::TopicAssignment> out;
  for (const auto& p : protocols) {
    for (const auto& s : p.contributions) {
      items.push_back(&s);
      out.push_back({p.ref.legislative_period, p.ref.session_number, s.index,
                     topics::Topic::kUnknown});
    }
  }
  std::optional<topics::Lexicon> lexicon;
  std::optional<topics::TopicClient> client;
  if (c.topic_endpoint) {
    client.emplace(net::Endpoint::Parse(*c.topic_endpoint));
  } else {
    lexicon = topics::Lexicon::FromFile(c.lexicon_path);
  }
  ParallelFor(items.size(), c.threads, [&](std::size_t i) {
    out[i].topic = client ? client->Classify(*items[i])
                          : topics::ClassifyBaseline(*items[i], *lexicon);
  });
  std::size_t unknown = 0;
  for (const auto& t : out) unknown += t.topic == topics::Topic::kUnknown;
  WriteArtifact(c, artifact::kTopics,
                [&](std::ostream& os) { topics::WriteTopics(os, out); });
  return {Summary({{"stage", "classify"},
                   {"contributions", out.size()},
                   {"source", client ? "external" : "lexicon"},
                   {"unknown", unknown},
                   {"artifacts", {artifact::kTopics}}}),
          {}};
}

// Inputs shared by stats and report; owns what AnalysisInputs points to.
struct AnalysisBundle {
  std::vector<corpus::Protocol> corpus;
  std::vector<detect::CtoEvent> events;
  std::vector<registry::Resolution> resolutions;
  std::vector<topics::TopicAssignment> topics;
  corpus::PartyAliases aliases;
  corpus::CoalitionTable coalitions;
  registry::MemberRegistry members;
  annotation::AnnotationStore store;
  AnalysisInputs inputs;
  AnalysisData data;

  explicit AnalysisBundle(const PipelineConfig& c)
      : corpus(ReadCorpusArtifact(c)),
        events(ReadEventsArtifact(c)),
        resolutions(ReadResolutionsArtifact(c)),
        topics(ReadTopicsArtifact(c)),
        aliases(LoadAliases(c)),
        coalitions(LoadCoalitions(c)),
        members(LoadMembers(c, aliases)),
        store(LoadStore(c, members)) {
    inputs = {&corpus, &events, &resolutions, &topics,
              &store,  &members, &aliases,    &coalitions};
    data = BuildAnalysisData(inputs);
  }
  AnalysisBundle(const AnalysisBundle&) = delete;
  AnalysisBundle& operator=(const AnalysisBundle&) = delete;
};

std::vector<std::string> ExclusionWarnings(const AnalysisData& d) {
  std::vector<std::string> out;
  if (d.unannotated > 0) {
    out.push_back(std::to_string(d.unannotated) +
                  " detected event(s) have no cause label yet and are excluded "
                  "from the statistics");
  }
  return out;
}

StageResult RunStats(const PipelineConfig& c) {
  Require(c, {Stage::kIngest, Stage::kDetect, Stage::kExtract,
              Stage::kDisambiguate, Stage::kClassify});
  const AnalysisBundle bundle(c);
  const auto& pairs =
      c.associations.empty() ? DefaultAssociations() : c.associations;
  stats::AssociationOptions options;
  options.iterations = c.iterations;
  options.seed = *c.seed;
  options.threads = c.threads;
  options.v_source = c.v_source;

  std::vector<stats::AssociationEntry> entries;
  std::size_t computed = 0;
  for (const auto& [a, b] : pairs) {
    stats::AssociationEntry e;
    e.row_variable = a;
    e.col_variable = b;
    const bool contribution_level =
        a == stats::Variable::kHasCto || b == stats::Variable::kHasCto;
    const auto& records =
        contribution_level ? bundle.data.contributions : bundle.data.events;
    try {
      const auto table = stats::BuildTable(records, a, b);
      e.result = stats::Associate(table, options);
      e.record_ids = table.record_ids();
      ++computed;
    } catch (const DegenerateTableError& err) {
      e.note = std::string("degenerate: ") + err.what();
    }
    entries.push_back(std::move(e));
  }
  WriteArtifact(c, artifact::kAssociationsJson, [&](std::ostream& out) {
    stats::WriteAssociationsJson(out, entries);
  });
  WriteArtifact(c, artifact::kAssociationsCsv, [&](std::ostream& out) {
    stats::WriteAssociationsCsv(out, entries);
  });
  return {Summary({{"stage", "stats"},
                   {"events_analysed", bundle.data.events.size()},
                   {"events_unannotated", bundle.data.unannotated},
                   {"events_rejected", bundle.data.rejected},
                   {"pairs", entries.size()},
                   {"computed", computed},
                   {"degenerate", entries.size() - computed},
                   {"iterations", c.iterations},
                   {"seed", *c.seed},
                   {"artifacts",
                    {artifact::kAssociationsJson, artifact::kAssociationsCsv}}}),
          ExclusionWarnings(bundle.data)};
}

StageResult RunReport(const PipelineConfig& c) {
  Require(c, {Stage::kIngest, Stage::kDetect, Stage::kExtract,
              Stage::kDisambiguate, Stage::kClassify, Stage::kStats});
  const AnalysisBundle bundle(c);
  const auto associations =
      ReadArtifact(c, artifact::kAssociationsJson, [](std::istream& in) {
        return stats::ReadAssociationsJson(in);
      });
  const auto written = WriteReports(
      c, {&bundle.corpus, &bundle.events, &bundle.inputs, &bundle.data,
          &associations});
  return {Summary({{"stage", "report"},
                   {"events_analysed", bundle.data.events.size()},
                   {"artifacts", written}}),
          ExclusionWarnings(bundle.data)};
}

}  // namespace

std::string_view StageName(Stage s) {
  return kStageNames[static_cast<std::size_t>(s)];
}

std::optional<Stage> ParseStage(std::string_view name) {
  for (std::size_t i = 0; i < kStageNames.size(); ++i) {
    if (kStageNames[i] == name) return static_cast<Stage>(i);
  }
  return std::nullopt;
}

StageResult RunStage(Stage stage, const PipelineConfig& config) {
  config.Validate();
  switch (stage) {
    case Stage::kIngest: return RunIngest(config);
    case Stage::kDetect: return RunDetect(config);
    case Stage::kExtract: return RunExtract(config);
    case Stage::kDisambiguate: return RunDisambiguate(config);
    case Stage::kClassify: return RunClassify(config);
    case Stage::kStats: return RunStats(config);
    case Stage::kReport: return RunReport(config);
    case Stage::kServe: break;
  }
  throw ValidationError("'serve' runs through ServeSession");
}

ServeSession::ServeSession(const PipelineConfig& config) {
  config.Validate();
  Require(config, {Stage::kIngest, Stage::kDetect, Stage::kExtract,
                   Stage::kDisambiguate});
  const auto protocols = ReadCorpusArtifact(config);
  const auto events = ReadEventsArtifact(config);
  const auto outcomes = ReadMentionsArtifact(config);
  const auto resolutions = ReadResolutionsArtifact(config);
  registry_ = LoadMembers(config, LoadAliases(config));
  queue_ = BuildQueue({&protocols, &events, &outcomes, &resolutions},
                      LoadStore(config, registry_),
                      detect::RuleMatcher(LoadRules(config)));
  server_ = std::make_unique<annotation::ApiServer>(queue_, &registry_,
                                                    config.annotation_log_path);
}

std::string ServeSession::Summary() const {
  const auto p = queue_.progress();
  return jsonutil::Dump(Json{{"stage", "serve"},
                             {"pending", p.pending},
                             {"resolved", p.resolved},
                             {"rejected", p.rejected}});
}

int ExitCodeFor(const std::exception& e) {
  if (dynamic_cast<const DependencyError*>(&e)) return 3;
  if (dynamic_cast<const IoError*>(&e) || dynamic_cast<const TransportError*>(&e) ||
      dynamic_cast<const ProtocolError*>(&e)) {
    return 4;
  }
  if (dynamic_cast<const Error*>(&e)) return 2;
  return 1;
}

}  // namespace cto::pipeline
