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

#include "inputs.h"

#include <filesystem>
#include <map>
#include <tuple>

#include "common/json_util.h"

namespace cto::pipeline::internal {

namespace fs = std::filesystem;
using jsonutil::Json;

namespace {

std::ifstream OpenInput(const fs::path& path, const char* what) {
  std::ifstream in(path);
  if (!in) throw IoError(std::string("cannot open ") + what + " " + path.string());
  return in;
}

const char* ArtifactOf(Stage s) {
  switch (s) {
    case Stage::kIngest: return artifact::kCorpus;
    case Stage::kDetect: return artifact::kEvents;
    case Stage::kExtract: return artifact::kMentions;
    case Stage::kDisambiguate: return artifact::kResolutions;
    case Stage::kClassify: return artifact::kTopics;
    case Stage::kStats: return artifact::kAssociationsJson;
    default: return nullptr;
  }
}

}  // namespace

corpus::PartyAliases LoadAliases(const PipelineConfig& config) {
  if (!config.party_aliases_path) return {};
  auto in = OpenInput(*config.party_aliases_path, "party aliases");
  return corpus::PartyAliases::FromStream(in);
}

corpus::CoalitionTable LoadCoalitions(const PipelineConfig& config) {
  if (!config.coalitions_path) return {};
  auto in = OpenInput(*config.coalitions_path, "coalition table");
  return corpus::CoalitionTable::FromStream(in);
}

detect::RuleConfig LoadRules(const PipelineConfig& config) {
  if (!config.rules_path) return detect::RuleConfig::Defaults();
  auto in = OpenInput(*config.rules_path, "rules");
  return detect::RuleConfig::FromStream(in);
}

registry::MemberRegistry LoadMembers(const PipelineConfig& config,
                                     const corpus::PartyAliases& aliases) {
  return registry::LoadRegistryFile(config.registry_path, aliases);
}

annotation::AnnotationStore LoadStore(const PipelineConfig& config,
                                      const registry::MemberRegistry& members) {
  auto store = annotation::LoadAnnotationLog(config.annotation_log_path);
  const auto& log = store.log();
  for (std::size_t i = 0; i < log.size(); ++i) {
    if (log[i].resolved_member && !members.Find(*log[i].resolved_member)) {
      throw ValidationError("annotation record " + std::to_string(i + 1) +
                            ": resolved_member '" + *log[i].resolved_member +
                            "' is not in the registry");
    }
  }
  store.set_member_check(
      [&members](const std::string& id) { return members.Find(id) != nullptr; });
  return store;
}

void Require(const PipelineConfig& config, std::initializer_list<Stage> stages) {
  for (Stage s : stages) {
    const char* name = ArtifactOf(s);
    if (!fs::is_regular_file(config.output_dir / name)) {
      throw DependencyError(std::string(name) + " is missing; run '" +
                                std::string(StageName(s)) + "' first",
                            std::string(StageName(s)));
    }
  }
}

std::ifstream OpenArtifact(const PipelineConfig& config, const char* name) {
  return OpenInput(config.output_dir / name, "artifact");
}

void WriteArtifact(const PipelineConfig& config, const char* name,
                   const std::function<void(std::ostream&)>& write) {
  const fs::path target = config.output_dir / name;
  const fs::path tmp = config.output_dir / (std::string(name) + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    write(out);
    out.flush();
    if (!out) throw IoError("write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) throw IoError("cannot replace " + target.string() + ": " + ec.message());
}

void ParallelFor(std::size_t n, unsigned threads,
                 const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min<std::size_t>(std::max(1u, threads), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) {
        {
          std::lock_guard lock(mu);
          if (failure) return;
        }
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(mu);
          if (!failure) failure = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

annotation::AnnotationQueue BuildQueue(const QueueInputs& in,
                                       annotation::AnnotationStore store,
                                       detect::RuleMatcher matcher) {
  std::map<std::tuple<int, int, std::size_t>, const corpus::SpeechContribution*>
      contributions;
  for (const auto& p : *in.corpus) {
    for (const auto& c : p.contributions) {
      contributions[{p.ref.legislative_period, p.ref.session_number, c.index}] = &c;
    }
  }
  std::map<detect::EventRef, const mentions::ExtractionOutcome*> outcome_of;
  for (const auto& o : *in.outcomes) outcome_of[o.event] = &o;
  std::map<detect::EventRef, const registry::Resolution*> resolution_of;
  for (const auto& r : *in.resolutions) resolution_of[r.event] = &r;

  annotation::AnnotationQueue queue(std::move(store), std::move(matcher));
  for (const auto& ev : *in.events) {
    const auto ref = ev.ref();
    auto oit = outcome_of.find(ref);
    if (oit == outcome_of.end()) {
      throw ValidationError("mentions.jsonl has no entry for event " +
                            ref.ToString() + "; rerun 'extract'");
    }
    std::optional<registry::Resolution> resolution;
    if (auto rit = resolution_of.find(ref); rit != resolution_of.end()) {
      resolution = *rit->second;
    }
    annotation::ItemContext ctx;
    ctx.sentence = ev.matched_sentence;
    if (ev.trigger_contribution_index) {
      auto cit = contributions.find({ref.legislative_period, ref.session_number,
                                     *ev.trigger_contribution_index});
      if (cit != contributions.end()) {
        ctx.trigger_speaker = cit->second->speaker_name;
        ctx.trigger_text = cit->second->raw_text;
      }
    }
    for (const auto& m : oit->second->mentions) ctx.mentions.push_back(m.surface);
    if (resolution) ctx.candidate_ids = resolution->candidates;
    queue.Enqueue(ev, *oit->second, resolution, std::move(ctx));
  }
  return queue;
}

void WriteQueue(std::ostream& out, const annotation::AnnotationQueue& queue) {
  for (const auto* item : queue.Items()) {
    Json j;
    j["id"] = item->ref().ToString();
    j["rule"] = detect::RuleName(item->event.matched_rule);
    Json reasons = Json::array();
    for (auto r : item->reasons) reasons.push_back(annotation::ReasonName(r));
    j["reasons"] = std::move(reasons);
    j["sentence"] = item->context.sentence;
    j["trigger_speaker"] = item->context.trigger_speaker
                               ? Json(*item->context.trigger_speaker)
                               : Json(nullptr);
    j["mentions"] = item->context.mentions;
    j["candidates"] = item->context.candidate_ids;
    out << jsonutil::Dump(j) << '\n';
  }
}

}  // namespace cto::pipeline::internal
