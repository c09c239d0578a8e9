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

#include "xml/dom.h"

#include <expat.h>

#include <memory>

#include "cto/error.h"
#include "cto/text/utf8.h"

namespace cto::xml {

std::optional<std::string> Node::Attribute(std::string_view key) const {
  auto it = attributes.find(std::string(key));
  if (it == attributes.end()) return std::nullopt;
  return it->second;
}

const Node* Node::Child(std::string_view child_name) const {
  for (const auto& c : children) {
    if (c->name == child_name) return c.get();
  }
  return nullptr;
}

std::vector<const Node*> Node::Children(std::string_view child_name) const {
  std::vector<const Node*> out;
  for (const auto& c : children) {
    if (c->name == child_name) out.push_back(c.get());
  }
  return out;
}

namespace {

void CollectText(const Node& node, std::string& out) {
  for (const auto& c : node.children) {
    if (c->is_text()) {
      out += c->text;
    } else {
      out.push_back(' ');
      CollectText(*c, out);
      out.push_back(' ');
    }
  }
}

struct Builder {
  std::unique_ptr<Node> root;
  std::vector<Node*> stack;
  XML_Parser parser = nullptr;
};

void OnStart(void* data, const XML_Char* name, const XML_Char** attrs) {
  auto* b = static_cast<Builder*>(data);
  auto node = std::make_unique<Node>();
  node->name = name;
  node->line = XML_GetCurrentLineNumber(b->parser);
  for (int i = 0; attrs[i] != nullptr; i += 2) {
    node->attributes.emplace(attrs[i], attrs[i + 1]);
  }
  Node* raw = node.get();
  if (b->stack.empty()) {
    b->root = std::move(node);
  } else {
    b->stack.back()->children.push_back(std::move(node));
  }
  b->stack.push_back(raw);
}

void OnEnd(void* data, const XML_Char*) {
  static_cast<Builder*>(data)->stack.pop_back();
}

void OnText(void* data, const XML_Char* s, int len) {
  auto* b = static_cast<Builder*>(data);
  if (b->stack.empty()) return;
  auto& kids = b->stack.back()->children;
  if (kids.empty() || !kids.back()->is_text()) {
    kids.push_back(std::make_unique<Node>());
  }
  kids.back()->text.append(s, static_cast<std::size_t>(len));
}

struct ParserDeleter {
  void operator()(XML_ParserStruct* p) const { XML_ParserFree(p); }
};

}  // namespace

std::string Node::InnerText() const {
  std::string out;
  CollectText(*this, out);
  return out;
}

std::string Node::OwnText() const {
  std::string out;
  for (const auto& c : children) {
    if (c->is_text()) out += c->text;
  }
  return text::NormalizeWhitespace(out);
}

std::unique_ptr<Node> Parse(std::string_view document) {
  std::unique_ptr<XML_ParserStruct, ParserDeleter> parser(
      XML_ParserCreate("UTF-8"));
  if (!parser) throw Error("cannot allocate XML parser");
  Builder builder;
  builder.parser = parser.get();
  XML_SetUserData(parser.get(), &builder);
  XML_SetElementHandler(parser.get(), OnStart, OnEnd);
  XML_SetCharacterDataHandler(parser.get(), OnText);
  if (XML_Parse(parser.get(), document.data(),
                static_cast<int>(document.size()), XML_TRUE) ==
      XML_STATUS_ERROR) {
    throw ParseError(
        std::string("malformed XML: ") +
            XML_ErrorString(XML_GetErrorCode(parser.get())),
        XML_GetCurrentLineNumber(parser.get()),
        XML_GetCurrentColumnNumber(parser.get()) + 1);
  }
  if (!builder.root) throw ParseError("empty XML document", 1, 1);
  return std::move(builder.root);
}

}  // namespace cto::xml
