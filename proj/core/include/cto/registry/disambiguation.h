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

#ifndef CTO_REGISTRY_DISAMBIGUATION_H_
#define CTO_REGISTRY_DISAMBIGUATION_H_

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "cto/corpus/party.h"
#include "cto/detect/detector.h"
#include "cto/mentions/extractor.h"
#include "cto/registry/registry.h"

namespace cto::registry {

enum class ResolutionKind { kResolved, kAmbiguous, kUnmatched };
enum class ResolutionMethod { kAuto, kManual };

std::string_view ResolutionKindName(ResolutionKind k);
std::optional<ResolutionKind> ParseResolutionKind(std::string_view name);

struct Resolution {
  detect::EventRef event;
  ResolutionKind kind = ResolutionKind::kUnmatched;
  // resolved: exactly one id; ambiguous: the surviving candidates (>= 2),
  // sorted; unmatched: empty.
  std::vector<std::string> candidates;
  ResolutionMethod method = ResolutionMethod::kAuto;

  std::optional<std::string> member_id() const {
    if (kind != ResolutionKind::kResolved) return std::nullopt;
    return candidates.front();
  }
  bool operator==(const Resolution&) const = default;
};

// Candidate set: members serving in the LP whose surname key matches the
// longest matching suffix of the mention's name tokens (leading tokens are
// then taken as first names). Filters, in order: bracketed party hint (when
// it names a known party), first name, Herr/Frau gender.
class Disambiguator {
 public:
  explicit Disambiguator(const MemberRegistry& registry,
                         corpus::PartyAliases aliases = {})
      : registry_(registry), aliases_(std::move(aliases)) {}

  Resolution Resolve(const mentions::PersonMention& mention, int lp) const;

  // The registry member a speaker name denotes, if unique. Used to attach
  // gender and party to session presidents.
  const MemberRecord* ResolveSpeaker(std::string_view speaker_name,
                                     std::optional<std::string> party,
                                     int lp) const;

 private:
  const MemberRegistry& registry_;
  corpus::PartyAliases aliases_;
};

inline Resolution Disambiguate(const mentions::PersonMention& mention, int lp,
                               const MemberRegistry& registry) {
  return Disambiguator(registry).Resolve(mention, lp);
}

void WriteResolutions(std::ostream& out,
                      const std::vector<Resolution>& resolutions);
std::vector<Resolution> ReadResolutions(std::istream& in);

}  // namespace cto::registry

#endif  // CTO_REGISTRY_DISAMBIGUATION_H_
