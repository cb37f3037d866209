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

#ifndef NETCOLLAB_SCENARIO_HPP_
#define NETCOLLAB_SCENARIO_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "netcollab/registry.hpp"
#include "netcollab/simenv.hpp"
#include "netcollab/vocabulary.hpp"

namespace netcollab {

struct Decision {
  enum class Kind { kDirectAnswer, kDelegate };

  Kind kind = Kind::kDirectAnswer;
  Token answer{};           // kDirectAnswer
  std::string action_type;  // kDelegate

  friend bool operator==(const Decision&, const Decision&) = default;
};

// The policy's discrete action set: direct-answer tokens first, then one
// delegation per action type. Action names are the symbol names.
class ActionSpace {
 public:
  ActionSpace() = default;
  ActionSpace(std::vector<Token> direct_answers, std::vector<std::string> action_types,
              const Vocabulary& vocab);

  std::size_t size() const { return names_.size(); }
  std::size_t num_direct() const { return direct_.size(); }
  const Decision& At(std::size_t index) const { return decisions_.at(index); }
  const std::string& Name(std::size_t index) const { return names_.at(index); }
  const std::vector<std::string>& action_types() const { return action_types_; }

  std::optional<std::size_t> IndexOf(std::string_view name) const;
  // Throws InvalidArgument for unknown names.
  std::size_t Index(std::string_view name) const;

 private:
  std::vector<Token> direct_;
  std::vector<std::string> action_types_;
  std::vector<Decision> decisions_;
  std::vector<std::string> names_;
};

// A validated ScenarioConfig together with its vocabulary and action space.
class Scenario {
 public:
  // Vocabulary order: fixed symbols, direct answers, action types, payloads,
  // agent-grounded ground truths. Error: BadConfig.
  explicit Scenario(ScenarioConfig config);

  const ScenarioConfig& config() const { return config_; }
  const Vocabulary& vocab() const { return vocab_; }
  const ActionSpace& actions() const { return actions_; }
  const GeneratorConfig& generator() const { return config_.generator; }
  std::optional<Token> integrate_token() const { return integrate_; }

  Registry MakeRegistry(double ewma_alpha = Registry::kDefaultEwmaAlpha) const;
  SimEnv MakeEnv() const { return SimEnv(config_.agents); }

 private:
  ScenarioConfig config_;
  Vocabulary vocab_;
  ActionSpace actions_;
  std::optional<Token> integrate_;
};

}  // namespace netcollab

#endif  // NETCOLLAB_SCENARIO_HPP_
