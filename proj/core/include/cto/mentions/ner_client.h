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

#ifndef CTO_MENTIONS_NER_CLIENT_H_
#define CTO_MENTIONS_NER_CLIENT_H_

#include <string>
#include <vector>

#include "cto/detect/detector.h"
#include "cto/mentions/extractor.h"
#include "cto/net/endpoint.h"

namespace cto::mentions {

// Client for an externally hosted NER model.
//
// Request:  POST <path>, body {"text": "<sentence>"}
// Response: [{"start": <int>, "end": <int>, "label": "<tag>"}, ...]
// Offsets count Unicode code points, end exclusive. Only "PER" spans are
// used. An empty (or PER-free) answer falls back to pattern extraction.
class NerClient {
 public:
  explicit NerClient(net::Endpoint endpoint) : endpoint_(std::move(endpoint)) {}

  // TransportError (message names the event) on network failure,
  // ProtocolError on a response outside the contract.
  ExtractionOutcome Extract(const detect::CtoEvent& event) const;

  // Issues at most `max_in_flight` concurrent requests. Outcomes are
  // returned in input order; the first failure is rethrown after all
  // in-flight requests finish.
  std::vector<ExtractionOutcome> ExtractAll(
      const std::vector<detect::CtoEvent>& events,
      unsigned max_in_flight = 4) const;

  const net::Endpoint& endpoint() const { return endpoint_; }

 private:
  net::Endpoint endpoint_;
  MentionExtractor patterns_;
};

inline ExtractionOutcome ExtractViaExternal(const detect::CtoEvent& event,
                                            const net::Endpoint& endpoint) {
  return NerClient(endpoint).Extract(event);
}

}  // namespace cto::mentions

#endif  // CTO_MENTIONS_NER_CLIENT_H_
