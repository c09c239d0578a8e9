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

#include "cto/corpus/corpus_io.h"

#include "common/json_util.h"
#include "cto/error.h"

namespace cto::corpus {

using jsonutil::Json;

void WriteCorpus(std::ostream& out, const std::vector<Protocol>& protocols) {
  for (const Protocol& p : protocols) {
    for (const SpeechContribution& c : p.contributions) {
      Json j;
      j["lp"] = p.ref.legislative_period;
      j["session"] = p.ref.session_number;
      j["date"] = FormatDate(p.ref.date);
      j["index"] = c.index;
      j["speaker"] = c.speaker_name;
      j["party"] = c.speaker_party ? Json(*c.speaker_party) : Json(nullptr);
      j["role"] = RoleName(c.role);
      j["agenda_position"] = c.agenda_position;
      j["raw_text"] = c.raw_text;
      Json sentences = Json::array();
      for (const Sentence& s : c.sentences) {
        sentences.push_back(Json{{"index", s.index},
                                 {"text", s.text},
                                 {"start", s.begin},
                                 {"end", s.end}});
      }
      j["sentences"] = std::move(sentences);
      out << jsonutil::Dump(j) << '\n';
    }
  }
}

std::vector<Protocol> ReadCorpus(std::istream& in) {
  std::vector<Protocol> protocols;
  const auto records = jsonutil::ReadLines(in);
  for (std::size_t r = 0; r < records.size(); ++r) {
    const Json& j = records[r];
    try {
      ProtocolRef ref;
      ref.legislative_period = jsonutil::Get<int>(j, "lp");
      ref.session_number = jsonutil::Get<int>(j, "session");
      auto date = ParseDate(jsonutil::Get<std::string>(j, "date"));
      if (!date) throw SchemaError("date");
      ref.date = *date;
      if (protocols.empty() || !(protocols.back().ref == ref)) {
        protocols.push_back(Protocol{ref, {}});
      }
      SpeechContribution c;
      c.index = jsonutil::Get<std::size_t>(j, "index");
      if (c.index != protocols.back().contributions.size()) {
        throw SchemaError("index", "records out of order");
      }
      c.speaker_name = jsonutil::Get<std::string>(j, "speaker");
      c.speaker_party = jsonutil::GetOptional<std::string>(j, "party");
      c.role = ParseRole(jsonutil::Get<std::string>(j, "role"));
      c.agenda_position = jsonutil::Get<std::size_t>(j, "agenda_position");
      c.raw_text = jsonutil::Get<std::string>(j, "raw_text");
      for (const Json& s : jsonutil::Get<Json>(j, "sentences")) {
        Sentence sentence;
        sentence.index = jsonutil::Get<std::size_t>(s, "index");
        sentence.text = jsonutil::Get<std::string>(s, "text");
        sentence.begin = jsonutil::Get<std::size_t>(s, "start");
        sentence.end = jsonutil::Get<std::size_t>(s, "end");
        c.sentences.push_back(std::move(sentence));
      }
      protocols.back().contributions.push_back(std::move(c));
    } catch (const SchemaError& e) {
      throw SchemaError(e.field(),
                        "corpus record " + std::to_string(r) + ": " + e.what());
    }
  }
  return protocols;
}

}  // namespace cto::corpus
