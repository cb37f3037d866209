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

#include "netcollab/scenario.hpp"

#include <algorithm>
#include <set>

#include "netcollab/error.hpp"

namespace netcollab {

ActionSpace::ActionSpace(std::vector<Token> direct_answers,
                         std::vector<std::string> action_types, const Vocabulary& vocab)
    : direct_(std::move(direct_answers)), action_types_(std::move(action_types)) {
  for (Token t : direct_) {
    decisions_.push_back({Decision::Kind::kDirectAnswer, t, ""});
    names_.push_back(vocab.Name(t));
  }
  for (const auto& a : action_types_) {
    if (!vocab.Find(a) || vocab.Kind(vocab.Get(a)) != SymbolKind::kActionType) {
      Fail(ErrorCode::kInvalidArgument, "'" + a + "' is not an action-type symbol");
    }
    decisions_.push_back({Decision::Kind::kDelegate, Token{}, a});
    names_.push_back(a);
  }
}

std::optional<std::size_t> ActionSpace::IndexOf(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t ActionSpace::Index(std::string_view name) const {
  if (auto i = IndexOf(name)) return *i;
  Fail(ErrorCode::kInvalidArgument, "unknown action '" + std::string(name) + "'");
}

Scenario::Scenario(ScenarioConfig config) : config_(std::move(config)) {
  ValidateGenerator(config_.generator);
  if (config_.direct_answers.empty()) Fail(ErrorCode::kBadConfig, "direct_answers must be nonempty");
  std::set<std::string> direct(config_.direct_answers.begin(), config_.direct_answers.end());
  if (direct.size() != config_.direct_answers.size()) {
    Fail(ErrorCode::kBadConfig, "direct_answers contains duplicates");
  }
  if (config_.integrate_token && direct.count(*config_.integrate_token) == 0) {
    Fail(ErrorCode::kBadConfig, "integrate_token must be one of direct_answers");
  }

  // Default action types: every capability any card or class mentions.
  if (config_.action_types.empty()) {
    std::set<std::string> all;
    for (const auto& c : config_.cards) all.insert(c.card.supported_actions.begin(), c.card.supported_actions.end());
    for (const auto& c : config_.generator.classes) {
      if (c.required_action) all.insert(*c.required_action);
    }
    config_.action_types.assign(all.begin(), all.end());
  }
  const std::set<std::string> types(config_.action_types.begin(), config_.action_types.end());
  if (types.size() != config_.action_types.size()) {
    Fail(ErrorCode::kBadConfig, "action_types contains duplicates");
  }

  try {
    std::vector<Token> direct_tokens;
    for (const auto& a : config_.direct_answers) {
      const bool integrate = config_.integrate_token && *config_.integrate_token == a;
      direct_tokens.push_back(vocab_.Add(a, integrate ? SymbolKind::kIntegrate : SymbolKind::kAnswer));
    }
    if (config_.integrate_token) integrate_ = vocab_.Get(*config_.integrate_token);
    for (const auto& a : config_.action_types) vocab_.Add(a, SymbolKind::kActionType);
    for (const auto& c : config_.generator.classes) vocab_.Add(c.payload, SymbolKind::kPayload);
    for (const auto& c : config_.generator.classes) {
      if (c.required_action) {
        if (types.count(*c.required_action) == 0) {
          Fail(ErrorCode::kBadConfig, "task class '" + c.name + "' requires unknown action '" +
                                          *c.required_action + "'");
        }
        vocab_.Add(c.ground_truth, SymbolKind::kAnswer);
      } else if (direct.count(c.ground_truth) == 0) {
        Fail(ErrorCode::kBadConfig, "direct task class '" + c.name +
                                        "' ground_truth must be one of direct_answers");
      }
      if (config_.integrate_token && c.ground_truth == *config_.integrate_token) {
        Fail(ErrorCode::kBadConfig, "integrate_token cannot be a ground truth");
      }
    }
    actions_ = ActionSpace(std::move(direct_tokens), config_.action_types, vocab_);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kBadConfig) throw;
    Fail(ErrorCode::kBadConfig, e.what());
  }

  std::set<std::string> card_ids;
  for (const auto& c : config_.cards) card_ids.insert(c.card.card_id);
  for (const auto& a : config_.agents) {
    ValidateSimAgent(a);
    if (card_ids.count(a.card.card_id) == 0) {
      Fail(ErrorCode::kBadConfig, "simulated agent '" + a.card.card_id + "' has no card");
    }
  }
}

Registry Scenario::MakeRegistry(double ewma_alpha) const {
  Registry registry(ewma_alpha);
  for (const auto& c : config_.cards) registry.RegisterCard(c.card, c.metrics);
  return registry;
}

}  // namespace netcollab
