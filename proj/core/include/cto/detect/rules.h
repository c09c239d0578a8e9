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

#ifndef CTO_DETECT_RULES_H_
#define CTO_DETECT_RULES_H_

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cto::detect {

enum class MatchedRule { kRule1, kRule2 };

std::string_view RuleName(MatchedRule rule);
std::optional<MatchedRule> ParseRuleName(std::string_view name);

// Word lists behind the two rules. All entries are compared against
// case-folded tokens with edge punctuation stripped.
struct RuleConfig {
  // Rule 1: a token containing `rule1_keyword`, together with one of
  // `rule1_verbs`; the token right before the keyword token must not be a
  // `rule1_preceding_guards` entry and no token may equal a
  // `rule1_sentence_guards` entry.
  std::string rule1_keyword = "ordnungsruf";
  std::vector<std::string> rule1_verbs = {"erteile", "erteilen"};
  std::vector<std::string> rule1_preceding_guards = {"kein", "keinen"};
  std::vector<std::string> rule1_sentence_guards = {"erteilten", "nicht"};

  // Rule 2: the token sequence `rule2_phrase`, plus some token beginning
  // with `rule2_verb_prefix`; the token right before the phrase must not be
  // a `rule2_preceding_guards` entry.
  std::vector<std::string> rule2_phrase = {"zur", "ordnung"};
  std::string rule2_verb_prefix = "rufe";
  std::vector<std::string> rule2_preceding_guards = {"gesetz", "gesetzes"};

  // Sentence splitter abbreviations.
  std::vector<std::string> abbreviations;

  // Plain "key = value, value" lines, '#' comments. Keys mirror the field
  // names (rule1.keyword, rule1.verbs, rule1.preceding_guards,
  // rule1.sentence_guards, rule2.phrase, rule2.verb_prefix,
  // rule2.preceding_guards, abbreviations). Omitted keys keep defaults.
  static RuleConfig FromStream(std::istream& in);
  static RuleConfig Defaults();
};

class RuleMatcher {
 public:
  RuleMatcher() : RuleMatcher(RuleConfig::Defaults()) {}
  explicit RuleMatcher(RuleConfig config);

  bool MatchRule1(std::string_view sentence) const;
  bool MatchRule2(std::string_view sentence) const;

  // Rule 1 takes precedence when both match.
  std::optional<MatchedRule> Match(std::string_view sentence) const;

  // A Rule 2 match whose "rufe..." token only appears after the phrase, as
  // in "... zur Ordnung rufen, ...". Such sentences often describe a call
  // to order rather than issue one and are flagged for review.
  bool IsAtypicalRule2(std::string_view sentence) const;

  const RuleConfig& config() const { return config_; }

 private:
  RuleConfig config_;
};

// Default-configured convenience wrappers.
bool MatchRule1(std::string_view sentence);
bool MatchRule2(std::string_view sentence);

}  // namespace cto::detect

#endif  // CTO_DETECT_RULES_H_
