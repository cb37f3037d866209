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

#ifndef NETCOLLAB_CONFIG_HPP_
#define NETCOLLAB_CONFIG_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "netcollab/simenv.hpp"
#include "netcollab/trainer.hpp"

namespace netcollab {

struct SftConfig {
  std::size_t steps = 500;
  double learning_rate = 0.1;
  std::size_t demos = 200;  // dialogues produced by the demo generator
};

struct RunConfig {
  std::uint64_t seed = 42;
  std::string profile;  // "case-study" or empty for explicit sections
  ScenarioConfig scenario;
  TrainerConfig trainer;  // trainer.seed mirrors seed
  SftConfig sft;
  double ewma_alpha = 0.3;
  std::size_t eval_episodes = 1000;
  std::string out_dir = "out";
};

// Parses a JSON config document. overrides are "key=value" strings where key
// is dotted ("trainer.learning_rate") or a bare key that names exactly one
// scalar setting ("group_size"); value is parsed as JSON, else taken as a
// string. Relative agent-card paths resolve against base_dir.
//
// Errors: BadConfig (unknown keys, bad types, G < 2, zero iterations,
// probabilities not summing to 1, ...), InvalidWeights (reward weights).
RunConfig ParseRunConfig(std::string_view json_text, const std::vector<std::string>& overrides = {},
                         const std::string& base_dir = ".");

// Reads path, then ParseRunConfig. Error: Io plus the above.
RunConfig LoadRunConfig(const std::string& path, const std::vector<std::string>& overrides = {});

// The case-study profile with every default; overrides still apply.
RunConfig DefaultRunConfig(const std::vector<std::string>& overrides = {});

}  // namespace netcollab

#endif  // NETCOLLAB_CONFIG_HPP_
