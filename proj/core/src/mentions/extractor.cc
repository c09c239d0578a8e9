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

#include "cto/mentions/extractor.h"

#include <algorithm>
#include <set>

#include "common/json_util.h"
#include "cto/error.h"
#include "cto/text/utf8.h"

namespace cto::mentions {

using jsonutil::Json;

std::string_view HonorificName(Honorific h) {
  switch (h) {
    case Honorific::kHerr: return "Herr";
    case Honorific::kFrau: return "Frau";
    case Honorific::kDr: return "Dr";
    case Honorific::kProf: return "Prof";
  }
  return "Herr";
}

std::optional<Honorific> ParseHonorific(std::string_view name) {
  if (name == "Herr") return Honorific::kHerr;
  if (name == "Frau") return Honorific::kFrau;
  if (name == "Dr") return Honorific::kDr;
  if (name == "Prof") return Honorific::kProf;
  return std::nullopt;
}

std::string_view SourceName(MentionSource s) {
  switch (s) {
    case MentionSource::kPattern: return "pattern";
    case MentionSource::kExternalNer: return "external_ner";
    case MentionSource::kManual: return "manual";
  }
  return "pattern";
}

std::optional<MentionSource> ParseSource(std::string_view name) {
  if (name == "pattern") return MentionSource::kPattern;
  if (name == "external_ner") return MentionSource::kExternalNer;
  if (name == "manual") return MentionSource::kManual;
  return std::nullopt;
}

std::string_view DispositionName(Disposition d) {
  switch (d) {
    case Disposition::kSingle: return "single";
    case Disposition::kNone: return "none";
    case Disposition::kMultiple: return "multiple";
  }
  return "none";
}

std::optional<Disposition> ParseDisposition(std::string_view name) {
  if (name == "single") return Disposition::kSingle;
  if (name == "none") return Disposition::kNone;
  if (name == "multiple") return Disposition::kMultiple;
  return std::nullopt;
}

Disposition DispositionFor(std::size_t mention_count) {
  if (mention_count == 0) return Disposition::kNone;
  if (mention_count == 1) return Disposition::kSingle;
  return Disposition::kMultiple;
}

namespace {

enum class Kind {
  kWord,       // anything else
  kName,       // capitalized, not a stop word
  kParticle,   // von, zu, van, de ... inside a name
  kMemberWord, // Abgeordnete(n/r), Kolleg(e/en/in)
  kAddress,    // Herr(n), Frau
  kTitle,      // Dr., Prof.
  kBracket,    // inside [...]
};

struct Tok {
  text::Token token;
  std::string folded;
  Kind kind = Kind::kWord;
  bool comma_after = false;  // raw token ended with ','
};

const std::set<std::string>& StopWords() {
  static const std::set<std::string> kWords = {
      "sie",       "ihnen",     "ihr",       "ihre",     "ich",
      "wir",       "er",        "es",        "du",       "dich",
      "ihn",       "präsident", "präsidentin", "ordnung", "ordnungsruf",
      "fraktion",  "haus",      "hause",     "damen",    "herren",
      "meine",     "mein",      "der",       "die",      "das",
      "den",       "dem",       "des",       "einen",    "ein",
      "eine",      "wegen",     "auch",      "nun",      "jetzt",
      "hiermit",   "deshalb",   "daher",     "dafür",    "dieser",
      "diese",     "zwischenruf", "zwischenrufe", "äußerung", "bemerkung",
      "zuruf",     "zurufe",    "bundestag", "regierung", "bundesregierung",
      "minister",  "ministerin", "staatssekretär", "kanzler", "bundeskanzler",
  };
  return kWords;
}

bool IsParticle(const std::string& folded) {
  return folded == "von" || folded == "zu" || folded == "van" ||
         folded == "de" || folded == "vom" || folded == "zum" ||
         folded == "der" || folded == "den";
}

std::vector<Tok> Classify(std::string_view sentence) {
  // Byte ranges enclosed in square brackets.
  std::vector<std::pair<std::size_t, std::size_t>> brackets;
  for (std::size_t open = sentence.find('['); open != std::string_view::npos;
       open = sentence.find('[', open + 1)) {
    const std::size_t close = sentence.find(']', open);
    if (close == std::string_view::npos) break;
    brackets.emplace_back(open, close);
  }
  std::vector<Tok> toks;
  for (const auto& t : text::Tokenize(sentence)) {
    Tok tok{t, text::FoldCase(t.text)};
    // Raw token end: scan to the next whitespace.
    std::size_t raw_end = t.end;
    while (raw_end < sentence.size() && sentence[raw_end] != ' ') ++raw_end;
    tok.comma_after =
        sentence.substr(t.end, raw_end - t.end).find(',') != std::string_view::npos;
    const std::string& f = tok.folded;
    const bool in_bracket = std::any_of(
        brackets.begin(), brackets.end(),
        [&](const auto& b) { return t.begin > b.first && t.end <= b.second; });
    if (in_bracket) {
      tok.kind = Kind::kBracket;
    } else if (f == "abgeordneten" || f == "abgeordnete" ||
               f == "abgeordneter" || f == "abg" || f == "kollege" ||
               f == "kollegen" || f == "kollegin") {
      tok.kind = Kind::kMemberWord;
    } else if (f == "herr" || f == "herrn" || f == "frau") {
      tok.kind = Kind::kAddress;
    } else if (f == "dr" || f == "prof" || f == "professor") {
      tok.kind = Kind::kTitle;
    } else if (text::StartsUpper(t.text) && !StopWords().count(f)) {
      tok.kind = Kind::kName;
    } else if (IsParticle(f)) {
      tok.kind = Kind::kParticle;
    }
    toks.push_back(std::move(tok));
  }
  return toks;
}

struct Candidate {
  PersonMention mention;
  int priority = 0;
};

std::optional<Honorific> HonorificOf(const Tok& t) {
  if (t.folded == "herr" || t.folded == "herrn") return Honorific::kHerr;
  if (t.folded == "frau") return Honorific::kFrau;
  if (t.folded == "dr") return Honorific::kDr;
  if (t.folded == "prof" || t.folded == "professor") return Honorific::kProf;
  return std::nullopt;
}

// Gendered address outranks academic titles.
void MergeHonorific(std::optional<Honorific>& into, std::optional<Honorific> h) {
  if (!h) return;
  if (!into || ((*h == Honorific::kHerr || *h == Honorific::kFrau) &&
                *into != Honorific::kHerr && *into != Honorific::kFrau)) {
    into = h;
  }
}

std::optional<std::string> BracketAfter(std::string_view sentence,
                                        std::size_t pos) {
  while (pos < sentence.size() && sentence[pos] == ' ') ++pos;
  if (pos >= sentence.size() || sentence[pos] != '[') return std::nullopt;
  const std::size_t close = sentence.find(']', pos);
  if (close == std::string_view::npos) return std::nullopt;
  std::string inner =
      text::NormalizeWhitespace(sentence.substr(pos + 1, close - pos - 1));
  if (inner.empty()) return std::nullopt;
  return inner;
}

// Reads "[titles/address]* Name+ [Party]" starting at toks[i]. Returns the
// index after the consumed tokens; `out` is empty when no name follows.
std::size_t ReadName(std::string_view sentence, const std::vector<Tok>& toks,
                     std::size_t i, std::optional<Honorific> honorific,
                     int priority, std::vector<Candidate>& out) {
  while (i < toks.size() &&
         (toks[i].kind == Kind::kTitle || toks[i].kind == Kind::kAddress ||
          toks[i].kind == Kind::kMemberWord)) {
    MergeHonorific(honorific, HonorificOf(toks[i]));
    if (toks[i].comma_after) return i + 1;
    ++i;
  }
  std::size_t first = i;
  std::size_t last = i;
  bool any = false;
  while (i < toks.size()) {
    if (toks[i].kind == Kind::kName) {
      any = true;
      last = i;
      if (toks[i].comma_after) {
        ++i;
        break;
      }
      ++i;
    } else if (toks[i].kind == Kind::kParticle && any && i + 1 < toks.size() &&
               (toks[i + 1].kind == Kind::kName ||
                toks[i + 1].kind == Kind::kParticle)) {
      ++i;
    } else if (toks[i].kind == Kind::kParticle && !any &&
               i + 1 < toks.size() && toks[i + 1].kind == Kind::kName &&
               first == i && honorific) {
      // "Herrn von Bismarck": particle right after the address.
      ++i;
    } else {
      break;
    }
  }
  if (!any) return i;
  PersonMention m;
  m.begin = toks[first].token.begin;
  m.end = toks[last].token.end;
  m.surface = std::string(sentence.substr(m.begin, m.end - m.begin));
  m.honorific = honorific;
  m.party_hint = BracketAfter(sentence, m.end);
  m.source = MentionSource::kPattern;
  out.push_back(Candidate{std::move(m), priority});
  while (i < toks.size() && toks[i].kind == Kind::kBracket) ++i;
  return i;
}

// Reads a coordinated list of names: Name [Party], Name und Name ...
std::size_t ReadNameList(std::string_view sentence,
                         const std::vector<Tok>& toks, std::size_t i,
                         std::optional<Honorific> honorific, int priority,
                         std::vector<Candidate>& out) {
  const std::size_t before = out.size();
  i = ReadName(sentence, toks, i, honorific, priority, out);
  while (out.size() > before && i < toks.size()) {
    const bool comma = i > 0 && toks[i - 1].comma_after;
    std::size_t next = i;
    if (toks[next].folded == "und" || toks[next].folded == "sowie") {
      ++next;
    } else if (!comma) {
      break;
    }
    const std::size_t count = out.size();
    const std::size_t after =
        ReadName(sentence, toks, next, std::nullopt, priority, out);
    if (out.size() == count) break;
    i = after;
  }
  return i;
}

bool Overlaps(const PersonMention& a, const PersonMention& b) {
  return a.begin < b.end && b.begin < a.end;
}

}  // namespace

std::vector<PersonMention> MentionExtractor::Extract(
    std::string_view sentence) const {
  const auto toks = Classify(sentence);
  std::vector<Candidate> found;

  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (toks[i].kind == Kind::kMemberWord) {
      ReadNameList(sentence, toks, i + 1, std::nullopt, 0, found);
    }
  }
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (toks[i].kind == Kind::kAddress) {
      ReadNameList(sentence, toks, i + 1, HonorificOf(toks[i]), 1, found);
    }
  }
  // (c) names between "rufe..." and "zur Ordnung".
  for (std::size_t r = 0; r < toks.size(); ++r) {
    if (!toks[r].folded.starts_with("rufe")) continue;
    std::size_t z = r + 1;
    while (z + 1 < toks.size() &&
           !(toks[z].folded == "zur" && toks[z + 1].folded == "ordnung")) {
      ++z;
    }
    if (z + 1 >= toks.size()) continue;
    std::optional<Honorific> honorific;
    for (std::size_t i = r + 1; i < z; ++i) {
      if (toks[i].kind == Kind::kName) {
        std::vector<Candidate> one;
        const std::size_t after = ReadName(sentence, toks, i, honorific, 2, one);
        for (auto& c : one) {
          if (c.mention.end <= toks[z].token.begin) found.push_back(c);
        }
        honorific.reset();
        i = std::max(i, after - 1);
      } else {
        MergeHonorific(honorific, HonorificOf(toks[i]));
      }
    }
    break;
  }

  std::stable_sort(found.begin(), found.end(),
                   [](const Candidate& a, const Candidate& b) {
                     return a.priority < b.priority;
                   });
  std::vector<PersonMention> accepted;
  for (auto& c : found) {
    const bool clash =
        std::any_of(accepted.begin(), accepted.end(),
                    [&](const auto& m) { return Overlaps(m, c.mention); });
    if (!clash) accepted.push_back(std::move(c.mention));
  }
  std::sort(accepted.begin(), accepted.end(),
            [](const auto& a, const auto& b) { return a.begin < b.begin; });
  return accepted;
}

ExtractionOutcome MentionExtractor::Extract(
    const detect::CtoEvent& event) const {
  ExtractionOutcome outcome;
  outcome.event = event.ref();
  outcome.mentions = Extract(event.matched_sentence);
  outcome.disposition = DispositionFor(outcome.mentions.size());
  return outcome;
}

PersonMention MentionExtractor::Describe(std::string_view sentence,
                                         std::size_t begin, std::size_t end,
                                         MentionSource source) const {
  PersonMention m;
  m.begin = begin;
  m.end = end;
  m.surface = std::string(sentence.substr(begin, end - begin));
  m.source = source;
  m.party_hint = BracketAfter(sentence, end);
  const auto toks = Classify(sentence);
  // Walk back over titles/addresses directly before the span.
  std::optional<std::size_t> first;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (toks[i].token.begin >= begin) {
      first = i;
      break;
    }
  }
  if (first) {
    for (std::size_t i = *first; i-- > 0;) {
      if (toks[i].kind != Kind::kTitle && toks[i].kind != Kind::kAddress) break;
      MergeHonorific(m.honorific, HonorificOf(toks[i]));
    }
  }
  return m;
}

void WriteOutcomes(std::ostream& out,
                   const std::vector<ExtractionOutcome>& outcomes) {
  for (const auto& o : outcomes) {
    Json j;
    j["event"] = o.event.ToString();
    j["disposition"] = DispositionName(o.disposition);
    Json mentions = Json::array();
    for (const auto& m : o.mentions) {
      Json mj;
      mj["surface"] = m.surface;
      mj["honorific"] =
          m.honorific ? Json(HonorificName(*m.honorific)) : Json(nullptr);
      mj["party_hint"] = m.party_hint ? Json(*m.party_hint) : Json(nullptr);
      mj["start"] = m.begin;
      mj["end"] = m.end;
      mj["source"] = SourceName(m.source);
      mentions.push_back(std::move(mj));
    }
    j["mentions"] = std::move(mentions);
    out << jsonutil::Dump(j) << '\n';
  }
}

std::vector<ExtractionOutcome> ReadOutcomes(std::istream& in) {
  std::vector<ExtractionOutcome> outcomes;
  const auto records = jsonutil::ReadLines(in);
  for (std::size_t r = 0; r < records.size(); ++r) {
    const Json& j = records[r];
    try {
      ExtractionOutcome o;
      auto ref = detect::EventRef::Parse(jsonutil::Get<std::string>(j, "event"));
      if (!ref) throw SchemaError("event");
      o.event = *ref;
      auto disp =
          ParseDisposition(jsonutil::Get<std::string>(j, "disposition"));
      if (!disp) throw SchemaError("disposition");
      o.disposition = *disp;
      for (const Json& mj : jsonutil::Get<Json>(j, "mentions")) {
        PersonMention m;
        m.surface = jsonutil::Get<std::string>(mj, "surface");
        if (auto h = jsonutil::GetOptional<std::string>(mj, "honorific")) {
          m.honorific = ParseHonorific(*h);
          if (!m.honorific) throw SchemaError("honorific");
        }
        m.party_hint = jsonutil::GetOptional<std::string>(mj, "party_hint");
        m.begin = jsonutil::Get<std::size_t>(mj, "start");
        m.end = jsonutil::Get<std::size_t>(mj, "end");
        auto src = ParseSource(jsonutil::Get<std::string>(mj, "source"));
        if (!src) throw SchemaError("source");
        m.source = *src;
        o.mentions.push_back(std::move(m));
      }
      if (o.disposition != DispositionFor(o.mentions.size())) {
        throw SchemaError("disposition", "does not match mention count");
      }
      outcomes.push_back(std::move(o));
    } catch (const SchemaError& e) {
      throw SchemaError(e.field(), "extraction record " + std::to_string(r) +
                                       ": " + e.what());
    }
  }
  return outcomes;
}

}  // namespace cto::mentions
