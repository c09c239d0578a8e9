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

#ifndef CTO_ANNOTATION_STORE_H_
#define CTO_ANNOTATION_STORE_H_

#include <filesystem>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "cto/annotation/types.h"

namespace cto::annotation {

inline constexpr int kLogFormatVersion = 1;

// Append-only annotation log. The per-event state is a pure left fold over
// the log; nothing is ever removed.
//
// Fold rules per record: a status override is applied first (rejection
// clears the derived cause), then cause and resolved_member overwrite.
class AnnotationStore {
 public:
  using MemberCheck = std::function<bool(const std::string& member_id)>;

  AnnotationStore() = default;

  // Optional check that resolved_member names a known member.
  void set_member_check(MemberCheck check) { member_check_ = std::move(check); }

  // Validates the record on its own and against the current state (a cause
  // on a rejected event needs an accompanying "confirmed"). Throws
  // ValidationError; the log is unchanged on failure.
  void Append(AnnotationRecord record);
  // The checks Append performs, without appending.
  void Check(const AnnotationRecord& record) const;

  const std::vector<AnnotationRecord>& log() const { return log_; }
  const std::map<detect::EventRef, EventState>& state() const { return state_; }
  EventState StateOf(const detect::EventRef& ref) const;

  static std::map<detect::EventRef, EventState> Fold(
      const std::vector<AnnotationRecord>& log);

  // Header line {"format":"cto-annotations","version":1} then one record
  // per line.
  void Export(std::ostream& out) const;
  // Validates every record; errors name the 0-based record index.
  static AnnotationStore Import(std::istream& in);

  static std::string RecordToJson(const AnnotationRecord& record);
  // One record from JSON text; `default_event` fills a missing "event".
  // Throws ValidationError (not schema-validated; call Validate or Append).
  static AnnotationRecord ParseRecord(
      std::string_view json_text,
      std::optional<detect::EventRef> default_event = {});
  static std::string HeaderLine();

 private:
  static void ApplyTo(EventState& state, const AnnotationRecord& record);

  std::vector<AnnotationRecord> log_;
  std::map<detect::EventRef, EventState> state_;
  MemberCheck member_check_;
};

// Appends records to a log file as they are accepted. Creates the file with
// its header line when missing.
class AnnotationLogWriter {
 public:
  explicit AnnotationLogWriter(std::filesystem::path path);
  void Write(const AnnotationRecord& record);

 private:
  std::filesystem::path path_;
};

AnnotationStore LoadAnnotationLog(const std::filesystem::path& path);

}  // namespace cto::annotation

#endif  // CTO_ANNOTATION_STORE_H_
