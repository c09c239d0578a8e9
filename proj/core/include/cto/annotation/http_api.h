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

#ifndef CTO_ANNOTATION_HTTP_API_H_
#define CTO_ANNOTATION_HTTP_API_H_

#include <filesystem>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>

#include "cto/annotation/queue.h"
#include "cto/annotation/store.h"
#include "cto/registry/registry.h"

namespace cto::annotation {

// Local JSON API for the annotation console.
//
//   GET  /api/queue               {"items": [summary, ...]}
//   GET  /api/item/{id}           full item with context and candidates
//   POST /api/item/{id}/annotate  AnnotationRecord body ("event" optional,
//                                 "timestamp" defaults to now)
//                                 200 {"ok": true, "item": item|null}
//                                 404 {"error": ...} unknown item
//                                 422 {"error": ...} validation failure
//   GET  /api/progress            {"pending": n, "resolved": n, "rejected": n}
//
// Writes hold an exclusive lock; reads share it. Accepted records are
// appended to the log file (when one is configured) before the response.
class ApiServer {
 public:
  ApiServer(AnnotationQueue& queue, const registry::MemberRegistry* registry,
            std::optional<std::filesystem::path> log_path = {});
  ~ApiServer();

  ApiServer(const ApiServer&) = delete;
  ApiServer& operator=(const ApiServer&) = delete;

  // Serve static files (the annotation console) from `dir` at "/".
  void MountStatic(const std::filesystem::path& dir);

  // Binds and serves until Stop(); returns false if binding failed.
  bool Listen(const std::string& host, int port);
  // Binds to an ephemeral port and returns it (or -1); then call Serve().
  int BindAnyPort(const std::string& host);
  void Serve();
  void Stop();
  void WaitUntilReady() const;

  // Handlers, usable without a socket. Return (status, JSON body).
  std::pair<int, std::string> HandleQueue() const;
  std::pair<int, std::string> HandleItem(const std::string& id) const;
  std::pair<int, std::string> HandleAnnotate(const std::string& id,
                                             const std::string& body);
  std::pair<int, std::string> HandleProgress() const;

 private:
  struct Impl;
  AnnotationQueue& queue_;
  const registry::MemberRegistry* registry_;
  std::optional<AnnotationLogWriter> writer_;
  mutable std::shared_mutex mutex_;
  std::unique_ptr<Impl> impl_;
};

}  // namespace cto::annotation

#endif  // CTO_ANNOTATION_HTTP_API_H_
