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

#include "cto/registry/disambiguation.h"

#include <algorithm>

#include "common/json_util.h"
#include "cto/error.h"
#include "cto/text/utf8.h"

namespace cto::registry {

using jsonutil::Json;

std::string_view ResolutionKindName(ResolutionKind k) {
  switch (k) {
    case ResolutionKind::kResolved: return "resolved";
    case ResolutionKind::kAmbiguous: return "ambiguous";
    case ResolutionKind::kUnmatched: return "unmatched";
  }
  return "unmatched";
}

std::optional<ResolutionKind> ParseResolutionKind(std::string_view name) {
  if (name == "resolved") return ResolutionKind::kResolved;
  if (name == "ambiguous") return ResolutionKind::kAmbiguous;
  if (name == "unmatched") return ResolutionKind::kUnmatched;
  return std::nullopt;
}

namespace {

using Candidates = std::vector<const MemberRecord*>;

struct NameParts {
  std::vector<std::string> first_names;  // normalized
  Candidates candidates;
};

NameParts FindCandidates(const MemberRegistry& registry,
                         std::string_view surface, int lp) {
  std::vector<std::string> tokens;
  for (const auto& t : text::Tokenize(surface)) tokens.emplace_back(t.text);
  NameParts parts;
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    std::string tail;
    for (std::size_t i = k; i < tokens.size(); ++i) {
      if (!tail.empty()) tail.push_back(' ');
      tail += tokens[i];
    }
    const std::string key = NormalizeNameKey(tail);
    if (key.empty()) continue;
    auto found = registry.Lookup(key, lp);
    if (found.empty()) continue;
    parts.candidates = std::move(found);
    for (std::size_t i = 0; i < k; ++i) {
      const std::string first = NormalizeNameKey(tokens[i]);
      if (!first.empty()) parts.first_names.push_back(first);
    }
    break;
  }
  return parts;
}

bool FirstNameMatches(const MemberRecord& m,
                      const std::vector<std::string>& given) {
  const std::string key = NormalizeNameKey(m.first_name);
  std::vector<std::string> names;
  for (const auto& t : text::Tokenize(key)) names.emplace_back(t.text);
  for (const auto& g : given) {
    const bool initial = text::CodepointCount(g) == 1;
    for (const auto& n : names) {
      if (n == g || (initial && n.starts_with(g))) return true;
    }
  }
  return false;
}

template <typename Pred>
void Keep(Candidates& c, Pred pred) {
  c.erase(std::remove_if(c.begin(), c.end(),
                         [&](const MemberRecord* m) { return !pred(*m); }),
          c.end());
}

}  // namespace

Resolution Disambiguator::Resolve(const mentions::PersonMention& mention,
                                  int lp) const {
  NameParts parts = FindCandidates(registry_, mention.surface, lp);
  Candidates& c = parts.candidates;

  if (mention.party_hint) {
    if (auto party = aliases_.Canonicalize(*mention.party_hint)) {
      Keep(c, [&](const MemberRecord& m) { return m.PartyIn(lp) == party; });
    }
  }
  if (!parts.first_names.empty()) {
    Keep(c, [&](const MemberRecord& m) {
      return FirstNameMatches(m, parts.first_names);
    });
  }
  if (mention.honorific == mentions::Honorific::kHerr) {
    Keep(c, [](const MemberRecord& m) { return m.gender == Gender::kMale; });
  } else if (mention.honorific == mentions::Honorific::kFrau) {
    Keep(c, [](const MemberRecord& m) { return m.gender == Gender::kFemale; });
  }

  Resolution r;
  r.method = ResolutionMethod::kAuto;
  for (const MemberRecord* m : c) r.candidates.push_back(m->member_id);
  std::sort(r.candidates.begin(), r.candidates.end());
  if (r.candidates.empty()) {
    r.kind = ResolutionKind::kUnmatched;
  } else if (r.candidates.size() == 1) {
    r.kind = ResolutionKind::kResolved;
  } else {
    r.kind = ResolutionKind::kAmbiguous;
  }
  return r;
}

const MemberRecord* Disambiguator::ResolveSpeaker(
    std::string_view speaker_name, std::optional<std::string> party,
    int lp) const {
  mentions::PersonMention m;
  // Drop titles such as "Dr." so the suffix search sees only names.
  std::string cleaned;
  for (const auto& t : text::Tokenize(speaker_name)) {
    const std::string folded = text::FoldCase(t.text);
    if (folded == "dr" || folded == "prof" || folded == "h.c") continue;
    if (!cleaned.empty()) cleaned.push_back(' ');
    cleaned += t.text;
  }
  m.surface = cleaned;
  m.party_hint = std::move(party);
  Resolution r = Resolve(m, lp);
  if (r.kind != ResolutionKind::kResolved) return nullptr;
  return registry_.Find(r.candidates.front());
}

void WriteResolutions(std::ostream& out,
                      const std::vector<Resolution>& resolutions) {
  for (const auto& r : resolutions) {
    Json j;
    j["event"] = r.event.ToString();
    j["outcome"] = ResolutionKindName(r.kind);
    j["candidates"] = r.candidates;
    j["method"] = r.method == ResolutionMethod::kAuto ? "auto" : "manual";
    out << jsonutil::Dump(j) << '\n';
  }
}

std::vector<Resolution> ReadResolutions(std::istream& in) {
  std::vector<Resolution> out;
  const auto records = jsonutil::ReadLines(in);
  for (std::size_t i = 0; i < records.size(); ++i) {
    const Json& j = records[i];
    try {
      Resolution r;
      auto ref = detect::EventRef::Parse(jsonutil::Get<std::string>(j, "event"));
      if (!ref) throw SchemaError("event");
      r.event = *ref;
      auto kind = ParseResolutionKind(jsonutil::Get<std::string>(j, "outcome"));
      if (!kind) throw SchemaError("outcome");
      r.kind = *kind;
      r.candidates = jsonutil::Get<std::vector<std::string>>(j, "candidates");
      const auto method = jsonutil::Get<std::string>(j, "method");
      if (method != "auto" && method != "manual") throw SchemaError("method");
      r.method = method == "auto" ? ResolutionMethod::kAuto
                                  : ResolutionMethod::kManual;
      const bool ok = (r.kind == ResolutionKind::kResolved &&
                       r.candidates.size() == 1) ||
                      (r.kind == ResolutionKind::kAmbiguous &&
                       r.candidates.size() >= 2) ||
                      (r.kind == ResolutionKind::kUnmatched &&
                       r.candidates.empty());
      if (!ok) throw SchemaError("candidates", "inconsistent with outcome");
      out.push_back(std::move(r));
    } catch (const SchemaError& e) {
      throw SchemaError(e.field(), "resolution record " + std::to_string(i) +
                                       ": " + e.what());
    }
  }
  return out;
}

}  // namespace cto::registry
