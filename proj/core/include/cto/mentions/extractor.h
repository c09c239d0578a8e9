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

#ifndef CTO_MENTIONS_EXTRACTOR_H_
#define CTO_MENTIONS_EXTRACTOR_H_

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "cto/detect/detector.h"

namespace cto::mentions {

enum class Honorific { kHerr, kFrau, kDr, kProf };
enum class MentionSource { kPattern, kExternalNer, kManual };
enum class Disposition { kSingle, kNone, kMultiple };

std::string_view HonorificName(Honorific h);
std::optional<Honorific> ParseHonorific(std::string_view name);
std::string_view SourceName(MentionSource s);
std::optional<MentionSource> ParseSource(std::string_view name);
std::string_view DispositionName(Disposition d);
std::optional<Disposition> ParseDisposition(std::string_view name);

struct PersonMention {
  std::string surface;  // sentence.substr(begin, end - begin)
  std::optional<Honorific> honorific;
  std::optional<std::string> party_hint;  // text inside [...] after the name
  std::size_t begin = 0;  // byte offsets into the sentence
  std::size_t end = 0;
  MentionSource source = MentionSource::kPattern;

  bool operator==(const PersonMention&) const = default;
};

struct ExtractionOutcome {
  detect::EventRef event;
  std::vector<PersonMention> mentions;
  Disposition disposition = Disposition::kNone;

  // none and multiple require a human to pick the person.
  bool needs_manual() const { return disposition != Disposition::kSingle; }
  bool operator==(const ExtractionOutcome&) const = default;
};

Disposition DispositionFor(std::size_t mention_count);

// Deterministic person-mention patterns for call-to-order sentences, tried
// in priority order:
//   (a) Abgeordnete(n/r) / Kolleg(e/en/in) [Herr|Frau|Dr.|Prof.]* Name [Party]
//   (b) Herr(n) / Frau [Dr.|Prof.]* Name [Party]
//   (c) capitalized tokens between a "rufe..." token and "zur Ordnung"
// Coordinated names ("Schmidt und Meyer", "Schmidt, Meyer") each become a
// mention. Lower-priority matches overlapping an accepted one are dropped.
class MentionExtractor {
 public:
  std::vector<PersonMention> Extract(std::string_view sentence) const;
  ExtractionOutcome Extract(const detect::CtoEvent& event) const;

  // Builds a mention for an externally supplied name span, reading the
  // honorific and bracketed party hint from the surrounding tokens.
  PersonMention Describe(std::string_view sentence, std::size_t begin,
                         std::size_t end, MentionSource source) const;
};

inline ExtractionOutcome ExtractMentions(const detect::CtoEvent& event) {
  return MentionExtractor().Extract(event);
}

void WriteOutcomes(std::ostream& out,
                   const std::vector<ExtractionOutcome>& outcomes);
std::vector<ExtractionOutcome> ReadOutcomes(std::istream& in);

}  // namespace cto::mentions

#endif  // CTO_MENTIONS_EXTRACTOR_H_
