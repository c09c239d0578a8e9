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

#include "cto/annotation/http_api.h"

#include <mutex>

#include "common/json_util.h"
#include "cto/error.h"
#include "httplib.h"

namespace cto::annotation {

using jsonutil::Json;

struct ApiServer::Impl {
  httplib::Server server;
};

namespace {

Json ErrorBody(const std::string& message) { return Json{{"error", message}}; }

Json Summary(const QueueItem& item) {
  Json reasons = Json::array();
  for (Reason r : item.reasons) reasons.push_back(ReasonName(r));
  Json j;
  j["id"] = item.ref().ToString();
  j["lp"] = item.event.protocol.legislative_period;
  j["session"] = item.event.protocol.session_number;
  j["date"] = corpus::FormatDate(item.event.protocol.date);
  j["rule"] = detect::RuleName(item.event.matched_rule);
  j["reasons"] = std::move(reasons);
  j["sentence"] = item.event.matched_sentence;
  return j;
}

Json StateJson(const EventState& s) {
  Json j;
  j["cause"] = s.cause ? Json(CauseName(*s.cause)) : Json(nullptr);
  j["resolved_member"] =
      s.resolved_member ? Json(*s.resolved_member) : Json(nullptr);
  j["status"] = s.status ? Json(OverrideName(*s.status)) : Json(nullptr);
  return j;
}

}  // namespace

ApiServer::ApiServer(AnnotationQueue& queue,
                     const registry::MemberRegistry* registry,
                     std::optional<std::filesystem::path> log_path)
    : queue_(queue), registry_(registry), impl_(std::make_unique<Impl>()) {
  if (log_path) writer_.emplace(*log_path);
  if (registry_ != nullptr) {
    queue_.mutable_store().set_member_check([this](const std::string& id) {
      return registry_->Find(id) != nullptr;
    });
  }

  auto reply = [](httplib::Response& res, std::pair<int, std::string> out) {
    res.status = out.first;
    res.set_content(out.second, "application/json; charset=utf-8");
  };
  auto& srv = impl_->server;
  srv.Get("/api/queue", [this, reply](const httplib::Request&,
                                      httplib::Response& res) {
    reply(res, HandleQueue());
  });
  srv.Get("/api/progress", [this, reply](const httplib::Request&,
                                         httplib::Response& res) {
    reply(res, HandleProgress());
  });
  srv.Get(R"(/api/item/([^/]+))", [this, reply](const httplib::Request& req,
                                                httplib::Response& res) {
    reply(res, HandleItem(req.matches[1]));
  });
  srv.Post(R"(/api/item/([^/]+)/annotate)",
           [this, reply](const httplib::Request& req, httplib::Response& res) {
             reply(res, HandleAnnotate(req.matches[1], req.body));
           });
}

ApiServer::~ApiServer() { Stop(); }

void ApiServer::MountStatic(const std::filesystem::path& dir) {
  impl_->server.set_mount_point("/", dir.string());
}

bool ApiServer::Listen(const std::string& host, int port) {
  return impl_->server.listen(host, port);
}

int ApiServer::BindAnyPort(const std::string& host) {
  return impl_->server.bind_to_any_port(host);
}

void ApiServer::Serve() { impl_->server.listen_after_bind(); }

void ApiServer::Stop() {
  if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

void ApiServer::WaitUntilReady() const { impl_->server.wait_until_ready(); }

std::pair<int, std::string> ApiServer::HandleQueue() const {
  std::shared_lock lock(mutex_);
  Json items = Json::array();
  for (const QueueItem* item : queue_.Items()) items.push_back(Summary(*item));
  return {200, jsonutil::Dump(Json{{"items", std::move(items)}})};
}

std::pair<int, std::string> ApiServer::HandleItem(const std::string& id) const {
  auto ref = detect::EventRef::Parse(id);
  std::shared_lock lock(mutex_);
  const QueueItem* item = ref ? queue_.Find(*ref) : nullptr;
  if (item == nullptr) {
    return {404, jsonutil::Dump(ErrorBody("unknown item " + id))};
  }
  Json j = Summary(*item);
  Json context;
  context["trigger_speaker"] = item->context.trigger_speaker
                                   ? Json(*item->context.trigger_speaker)
                                   : Json(nullptr);
  context["trigger_text"] = item->context.trigger_text
                                ? Json(*item->context.trigger_text)
                                : Json(nullptr);
  context["mentions"] = item->context.mentions;
  Json candidates = Json::array();
  for (const auto& member_id : item->context.candidate_ids) {
    Json c;
    c["member_id"] = member_id;
    const registry::MemberRecord* m =
        registry_ ? registry_->Find(member_id) : nullptr;
    const int lp = item->event.protocol.legislative_period;
    c["name"] = m ? Json(m->DisplayName()) : Json(nullptr);
    c["gender"] = m ? Json(registry::GenderName(m->gender)) : Json(nullptr);
    auto party = m ? m->PartyIn(lp) : std::nullopt;
    c["party"] = party ? Json(*party) : Json(nullptr);
    c["lps"] = m ? Json(std::vector<int>(m->lps_served.begin(),
                                          m->lps_served.end()))
                 : Json::array();
    candidates.push_back(std::move(c));
  }
  context["candidates"] = std::move(candidates);
  j["context"] = std::move(context);
  j["annotation"] = StateJson(queue_.store().StateOf(item->ref()));
  return {200, jsonutil::Dump(j)};
}

std::pair<int, std::string> ApiServer::HandleAnnotate(const std::string& id,
                                                      const std::string& body) {
  auto ref = detect::EventRef::Parse(id);
  std::unique_lock lock(mutex_);
  if (!ref || queue_.Find(*ref) == nullptr) {
    return {404, jsonutil::Dump(ErrorBody("unknown item " + id))};
  }
  try {
    AnnotationRecord record = AnnotationStore::ParseRecord(body, *ref);
    if (record.timestamp.empty()) record.timestamp = CurrentTimestamp();
    if (record.event != *ref) {
      throw ValidationError("event: record is for " + record.event.ToString() +
                            ", not " + id);
    }
    // Validate against the store before touching the log file.
    queue_.store().Check(record);
    if (writer_) writer_->Write(record);
    auto remaining = queue_.Apply(*ref, std::move(record));
    Json out;
    out["ok"] = true;
    out["item"] = remaining ? Summary(*remaining) : Json(nullptr);
    return {200, jsonutil::Dump(out)};
  } catch (const ValidationError& e) {
    return {422, jsonutil::Dump(ErrorBody(e.what()))};
  } catch (const NotFoundError& e) {
    return {404, jsonutil::Dump(ErrorBody(e.what()))};
  } catch (const IoError& e) {
    return {500, jsonutil::Dump(ErrorBody(e.what()))};
  }
}

std::pair<int, std::string> ApiServer::HandleProgress() const {
  std::shared_lock lock(mutex_);
  const Progress p = queue_.progress();
  Json j;
  j["pending"] = p.pending;
  j["resolved"] = p.resolved;
  j["rejected"] = p.rejected;
  return {200, jsonutil::Dump(j)};
}

}  // namespace cto::annotation
