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

#include "cto/mentions/ner_client.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "common/json_util.h"
#include "cto/error.h"
#include "cto/text/utf8.h"

namespace cto::mentions {

using jsonutil::Json;

ExtractionOutcome NerClient::Extract(const detect::CtoEvent& event) const {
  const std::string& sentence = event.matched_sentence;
  const std::string id = event.ref().ToString();
  std::string body;
  try {
    body = net::PostJson(endpoint_, Json{{"text", sentence}}.dump());
  } catch (const TransportError& e) {
    throw TransportError("event " + id + ": " + e.what());
  } catch (const ProtocolError& e) {
    throw ProtocolError("event " + id + ": " + e.what());
  }

  Json spans;
  try {
    spans = Json::parse(body);
  } catch (const Json::parse_error&) {
    throw ProtocolError("event " + id + ": NER response is not JSON");
  }
  if (!spans.is_array()) {
    throw ProtocolError("event " + id + ": NER response must be a JSON list");
  }
  const std::size_t length = text::CodepointCount(sentence);
  ExtractionOutcome outcome;
  outcome.event = event.ref();
  for (const Json& span : spans) {
    if (!span.is_object() || !span.contains("start") ||
        !span.contains("end") || !span.contains("label") ||
        !span["start"].is_number_unsigned() ||
        !span["end"].is_number_unsigned() || !span["label"].is_string()) {
      throw ProtocolError("event " + id +
                          ": NER span needs integer start/end and a label");
    }
    const auto start = span["start"].get<std::size_t>();
    const auto end = span["end"].get<std::size_t>();
    if (start >= end || end > length) {
      throw ProtocolError("event " + id + ": NER span out of range");
    }
    if (span["label"].get<std::string>() != "PER") continue;
    const std::size_t b = text::ByteOffsetOfCodepoint(sentence, start);
    const std::size_t e = text::ByteOffsetOfCodepoint(sentence, end);
    outcome.mentions.push_back(
        patterns_.Describe(sentence, b, e, MentionSource::kExternalNer));
  }
  if (outcome.mentions.empty()) return patterns_.Extract(event);
  std::sort(outcome.mentions.begin(), outcome.mentions.end(),
            [](const auto& a, const auto& b) { return a.begin < b.begin; });
  outcome.disposition = DispositionFor(outcome.mentions.size());
  return outcome;
}

std::vector<ExtractionOutcome> NerClient::ExtractAll(
    const std::vector<detect::CtoEvent>& events, unsigned max_in_flight) const {
  std::vector<ExtractionOutcome> outcomes(events.size());
  std::vector<std::exception_ptr> errors(events.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < events.size(); i = next++) {
      try {
        outcomes[i] = Extract(events[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned workers = std::max<unsigned>(
      1, std::min<std::size_t>(max_in_flight, events.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < workers; ++t) pool.emplace_back(worker);
    worker();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return outcomes;
}

}  // namespace cto::mentions
