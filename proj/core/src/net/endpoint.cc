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

#include "cto/net/endpoint.h"

#include <charconv>

#include "cto/error.h"
#include "httplib.h"

namespace cto::net {

Endpoint Endpoint::Parse(std::string_view url) {
  constexpr std::string_view kScheme = "http://";
  if (!url.starts_with(kScheme)) {
    throw ValidationError("endpoint must start with http://: " +
                          std::string(url));
  }
  std::string_view rest = url.substr(kScheme.size());
  Endpoint ep;
  const std::size_t slash = rest.find('/');
  std::string_view authority = rest.substr(0, slash);
  if (slash != std::string_view::npos) ep.path = std::string(rest.substr(slash));
  const std::size_t colon = authority.rfind(':');
  if (colon != std::string_view::npos) {
    std::string_view port = authority.substr(colon + 1);
    auto [ptr, ec] = std::from_chars(port.data(), port.data() + port.size(),
                                     ep.port);
    if (ec != std::errc{} || ptr != port.data() + port.size() || ep.port <= 0 ||
        ep.port > 65535) {
      throw ValidationError("bad port in endpoint: " + std::string(url));
    }
    authority = authority.substr(0, colon);
  }
  if (authority.empty()) {
    throw ValidationError("missing host in endpoint: " + std::string(url));
  }
  ep.host = std::string(authority);
  return ep;
}

std::string Endpoint::ToString() const {
  return "http://" + host + ":" + std::to_string(port) + path;
}

std::string PostJson(const Endpoint& endpoint, const std::string& body) {
  httplib::Client client(endpoint.host, endpoint.port);
  const auto seconds =
      std::chrono::duration_cast<std::chrono::seconds>(endpoint.timeout);
  const auto micros = std::chrono::duration_cast<std::chrono::microseconds>(
      endpoint.timeout - seconds);
  client.set_connection_timeout(seconds.count(), micros.count());
  client.set_read_timeout(seconds.count(), micros.count());
  client.set_write_timeout(seconds.count(), micros.count());
  auto result = client.Post(endpoint.path, body, "application/json");
  if (!result) {
    throw TransportError("request to " + endpoint.ToString() +
                         " failed: " + httplib::to_string(result.error()));
  }
  if (result->status != 200) {
    throw ProtocolError("endpoint " + endpoint.ToString() + " answered HTTP " +
                        std::to_string(result->status));
  }
  return result->body;
}

}  // namespace cto::net
