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

#include "cto/detect/rules.h"

#include <algorithm>

#include "cto/corpus/sentence_splitter.h"
#include "cto/error.h"
#include "cto/text/utf8.h"

namespace cto::detect {

namespace {

std::vector<std::string> FoldedTokens(std::string_view sentence) {
  std::vector<std::string> out;
  for (const auto& t : text::Tokenize(sentence)) {
    out.push_back(text::FoldCase(t.text));
  }
  return out;
}

bool Contains(const std::vector<std::string>& list, const std::string& s) {
  return std::find(list.begin(), list.end(), s) != list.end();
}

std::vector<std::string> FoldAll(std::vector<std::string> list) {
  for (auto& s : list) s = text::FoldCase(s);
  return list;
}

// Start indices of every occurrence of `phrase` as consecutive tokens.
std::vector<std::size_t> FindPhrase(const std::vector<std::string>& tokens,
                                    const std::vector<std::string>& phrase) {
  std::vector<std::size_t> hits;
  if (phrase.empty() || tokens.size() < phrase.size()) return hits;
  for (std::size_t i = 0; i + phrase.size() <= tokens.size(); ++i) {
    if (std::equal(phrase.begin(), phrase.end(), tokens.begin() + i)) {
      hits.push_back(i);
    }
  }
  return hits;
}

std::vector<std::string> SplitValues(std::string_view value) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= value.size()) {
    std::size_t end = value.find(',', start);
    if (end == std::string_view::npos) end = value.size();
    std::string item = text::NormalizeWhitespace(value.substr(start, end - start));
    if (!item.empty()) out.push_back(std::move(item));
    start = end + 1;
  }
  return out;
}

}  // namespace

std::string_view RuleName(MatchedRule rule) {
  return rule == MatchedRule::kRule1 ? "rule1" : "rule2";
}

std::optional<MatchedRule> ParseRuleName(std::string_view name) {
  if (name == "rule1") return MatchedRule::kRule1;
  if (name == "rule2") return MatchedRule::kRule2;
  return std::nullopt;
}

RuleConfig RuleConfig::Defaults() {
  RuleConfig config;
  config.abbreviations = corpus::DefaultAbbreviations();
  return config;
}

RuleConfig RuleConfig::FromStream(std::istream& in) {
  RuleConfig config = Defaults();
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string trimmed = text::NormalizeWhitespace(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    const std::size_t eq = trimmed.find('=');
    if (eq == std::string::npos) {
      throw ParseError("rule config line needs key = value", line_no, 1);
    }
    const std::string key = text::NormalizeWhitespace(trimmed.substr(0, eq));
    const std::string value = trimmed.substr(eq + 1);
    auto values = SplitValues(value);
    auto single = [&]() -> std::string {
      if (values.size() != 1) {
        throw ParseError("key '" + key + "' takes exactly one value", line_no,
                         eq + 2);
      }
      return values.front();
    };
    if (key == "rule1.keyword") {
      config.rule1_keyword = single();
    } else if (key == "rule1.verbs") {
      config.rule1_verbs = values;
    } else if (key == "rule1.preceding_guards") {
      config.rule1_preceding_guards = values;
    } else if (key == "rule1.sentence_guards") {
      config.rule1_sentence_guards = values;
    } else if (key == "rule2.phrase") {
      config.rule2_phrase.clear();
      for (const auto& t : text::Tokenize(single())) {
        config.rule2_phrase.emplace_back(t.text);
      }
    } else if (key == "rule2.verb_prefix") {
      config.rule2_verb_prefix = single();
    } else if (key == "rule2.preceding_guards") {
      config.rule2_preceding_guards = values;
    } else if (key == "abbreviations") {
      config.abbreviations = values;
    } else {
      throw ParseError("unknown rule config key '" + key + "'", line_no, 1);
    }
  }
  return config;
}

RuleMatcher::RuleMatcher(RuleConfig config) : config_(std::move(config)) {
  config_.rule1_keyword = text::FoldCase(config_.rule1_keyword);
  config_.rule1_verbs = FoldAll(std::move(config_.rule1_verbs));
  config_.rule1_preceding_guards =
      FoldAll(std::move(config_.rule1_preceding_guards));
  config_.rule1_sentence_guards =
      FoldAll(std::move(config_.rule1_sentence_guards));
  config_.rule2_phrase = FoldAll(std::move(config_.rule2_phrase));
  config_.rule2_verb_prefix = text::FoldCase(config_.rule2_verb_prefix);
  config_.rule2_preceding_guards =
      FoldAll(std::move(config_.rule2_preceding_guards));
  if (config_.rule1_keyword.empty() || config_.rule2_phrase.empty() ||
      config_.rule2_verb_prefix.empty()) {
    throw ValidationError("rule keyword, phrase and verb prefix must be set");
  }
}

bool RuleMatcher::MatchRule1(std::string_view sentence) const {
  const auto tokens = FoldedTokens(sentence);
  bool has_verb = false;
  for (const auto& t : tokens) {
    if (Contains(config_.rule1_sentence_guards, t)) return false;
    has_verb = has_verb || Contains(config_.rule1_verbs, t);
  }
  if (!has_verb) return false;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].find(config_.rule1_keyword) == std::string::npos) continue;
    if (i > 0 && Contains(config_.rule1_preceding_guards, tokens[i - 1])) {
      continue;
    }
    return true;
  }
  return false;
}

bool RuleMatcher::MatchRule2(std::string_view sentence) const {
  const auto tokens = FoldedTokens(sentence);
  const bool has_verb =
      std::any_of(tokens.begin(), tokens.end(), [&](const std::string& t) {
        return t.starts_with(config_.rule2_verb_prefix);
      });
  if (!has_verb) return false;
  for (std::size_t start : FindPhrase(tokens, config_.rule2_phrase)) {
    if (start > 0 &&
        Contains(config_.rule2_preceding_guards, tokens[start - 1])) {
      continue;
    }
    return true;
  }
  return false;
}

std::optional<MatchedRule> RuleMatcher::Match(std::string_view sentence) const {
  if (MatchRule1(sentence)) return MatchedRule::kRule1;
  if (MatchRule2(sentence)) return MatchedRule::kRule2;
  return std::nullopt;
}

bool RuleMatcher::IsAtypicalRule2(std::string_view sentence) const {
  if (!MatchRule2(sentence)) return false;
  const auto tokens = FoldedTokens(sentence);
  const auto hits = FindPhrase(tokens, config_.rule2_phrase);
  if (hits.empty()) return false;
  for (std::size_t i = 0; i < hits.front(); ++i) {
    if (tokens[i].starts_with(config_.rule2_verb_prefix)) return false;
  }
  return true;
}

bool MatchRule1(std::string_view sentence) {
  static const RuleMatcher kDefault;
  return kDefault.MatchRule1(sentence);
}

bool MatchRule2(std::string_view sentence) {
  static const RuleMatcher kDefault;
  return kDefault.MatchRule2(sentence);
}

}  // namespace cto::detect
