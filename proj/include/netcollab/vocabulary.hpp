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

#ifndef NETCOLLAB_VOCABULARY_HPP_
#define NETCOLLAB_VOCABULARY_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace netcollab {

struct Token {
  std::uint32_t id = 0;

  friend auto operator<=>(const Token&, const Token&) = default;
};

enum class SymbolKind {
  kControl,     // <action> </action> <ans> </ans>
  kSystem,      // agent success / failure markers
  kNoise,       // chatter agents emit outside the answer span
  kWrong,       // the answer an agent gives when it fails
  kAnswer,      // answer tokens, including agent-grounded ground truths
  kIntegrate,   // "answer with the latest agent result"
  kActionType,  // delegation targets
  kPayload,     // goal literals passed to agents
};

// Closed symbolic vocabulary. The first eight ids are fixed; everything else
// is appended in configuration order, so two vocabularies built from the same
// configuration agree id-for-id.
class Vocabulary {
 public:
  static constexpr Token kActionOpen{0};
  static constexpr Token kActionClose{1};
  static constexpr Token kAnsOpen{2};
  static constexpr Token kAnsClose{3};
  static constexpr Token kAgentOk{4};
  static constexpr Token kAgentFail{5};
  static constexpr Token kNoise{6};
  static constexpr Token kWrong{7};

  Vocabulary();

  // Returns the existing id when `name` is already present with the same
  // kind; a kind clash is an InvalidArgument error.
  Token Add(std::string_view name, SymbolKind kind);

  std::optional<Token> Find(std::string_view name) const;
  // Throws InvalidArgument for unknown names.
  Token Get(std::string_view name) const;

  const std::string& Name(Token t) const;
  SymbolKind Kind(Token t) const;
  bool Contains(Token t) const { return t.id < names_.size(); }
  bool IsControl(Token t) const { return t.id <= kAnsClose.id; }
  std::size_t size() const { return names_.size(); }

  std::vector<std::string> Names(const std::vector<Token>& tokens) const;
  std::vector<Token> Tokens(const std::vector<std::string>& names) const;

 private:
  std::vector<std::string> names_;
  std::vector<SymbolKind> kinds_;
  std::map<std::string, std::uint32_t, std::less<>> index_;
};

}  // namespace netcollab

#endif  // NETCOLLAB_VOCABULARY_HPP_
