// Copyright 2026 The NetCollab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "netcollab/vocabulary.hpp"

#include "netcollab/error.hpp"

namespace netcollab {

Vocabulary::Vocabulary() {
  Add("<action>", SymbolKind::kControl);
  Add("</action>", SymbolKind::kControl);
  Add("<ans>", SymbolKind::kControl);
  Add("</ans>", SymbolKind::kControl);
  Add("agent_ok", SymbolKind::kSystem);
  Add("agent_fail", SymbolKind::kSystem);
  Add("chatter", SymbolKind::kNoise);
  Add("wrong", SymbolKind::kWrong);
}

Token Vocabulary::Add(std::string_view name, SymbolKind kind) {
  if (name.empty()) Fail(ErrorCode::kInvalidArgument, "empty symbol name");
  if (auto it = index_.find(name); it != index_.end()) {
    if (kinds_[it->second] != kind) {
      Fail(ErrorCode::kInvalidArgument,
           "symbol '" + std::string(name) + "' already registered with another kind");
    }
    return Token{it->second};
  }
  const auto id = static_cast<std::uint32_t>(names_.size());
  names_.emplace_back(name);
  kinds_.push_back(kind);
  index_.emplace(std::string(name), id);
  return Token{id};
}

std::optional<Token> Vocabulary::Find(std::string_view name) const {
  if (auto it = index_.find(name); it != index_.end()) return Token{it->second};
  return std::nullopt;
}

Token Vocabulary::Get(std::string_view name) const {
  if (auto t = Find(name)) return *t;
  Fail(ErrorCode::kInvalidArgument, "unknown symbol '" + std::string(name) + "'");
}

const std::string& Vocabulary::Name(Token t) const {
  if (!Contains(t)) Fail(ErrorCode::kInvalidArgument, "token id out of range");
  return names_[t.id];
}

SymbolKind Vocabulary::Kind(Token t) const {
  if (!Contains(t)) Fail(ErrorCode::kInvalidArgument, "token id out of range");
  return kinds_[t.id];
}

std::vector<std::string> Vocabulary::Names(const std::vector<Token>& tokens) const {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (Token t : tokens) out.push_back(Name(t));
  return out;
}

std::vector<Token> Vocabulary::Tokens(const std::vector<std::string>& names) const {
  std::vector<Token> out;
  out.reserve(names.size());
  for (const auto& n : names) out.push_back(Get(n));
  return out;
}

}  // namespace netcollab
