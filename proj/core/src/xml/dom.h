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

#ifndef CTO_SRC_XML_DOM_H_
#define CTO_SRC_XML_DOM_H_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Minimal element tree built with expat. Only what the protocol and registry
// readers need: elements, attributes and character data in document order.
namespace cto::xml {

struct Node {
  std::string name;
  std::map<std::string, std::string> attributes;
  // Children interleaved with text. A child with an empty name is a text run.
  std::vector<std::unique_ptr<Node>> children;
  std::string text;  // only for text runs
  std::size_t line = 0;

  bool is_text() const { return name.empty(); }

  std::optional<std::string> Attribute(std::string_view key) const;
  const Node* Child(std::string_view child_name) const;
  std::vector<const Node*> Children(std::string_view child_name) const;

  // Concatenated character data of this subtree. Element boundaries insert a
  // single space so block elements do not fuse words.
  std::string InnerText() const;
  // Character data of direct text children only, trimmed.
  std::string OwnText() const;
};

// Throws cto::ParseError with expat's line/column on malformed input.
std::unique_ptr<Node> Parse(std::string_view document);

}  // namespace cto::xml

#endif  // CTO_SRC_XML_DOM_H_
