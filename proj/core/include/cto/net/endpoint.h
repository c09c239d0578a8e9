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

#ifndef CTO_NET_ENDPOINT_H_
#define CTO_NET_ENDPOINT_H_

#include <chrono>
#include <string>
#include <string_view>

namespace cto::net {

// Plain-HTTP service address, e.g. "http://127.0.0.1:8500/ner".
struct Endpoint {
  std::string host;
  int port = 80;
  std::string path = "/";
  std::chrono::milliseconds timeout{10000};

  // Throws ValidationError for anything but http://host[:port][/path].
  static Endpoint Parse(std::string_view url);
  std::string ToString() const;
};

// POSTs a JSON body and returns the response body. Network failures throw
// TransportError; non-200 answers throw ProtocolError.
std::string PostJson(const Endpoint& endpoint, const std::string& body);

}  // namespace cto::net

#endif  // CTO_NET_ENDPOINT_H_
