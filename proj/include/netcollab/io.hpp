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

#ifndef NETCOLLAB_IO_HPP_
#define NETCOLLAB_IO_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "netcollab/orchestrator.hpp"
#include "netcollab/policy.hpp"
#include "netcollab/registry.hpp"
#include "netcollab/rewards.hpp"
#include "netcollab/scenario.hpp"

namespace netcollab {

// File helpers. Errors: Io.
std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view contents);

// Checkpoint: {"shape": [rows, cols], "values": [row-major doubles]}.
std::string CheckpointToJson(const PolicyParams& params);
// Error: BadCheckpoint (malformed, non-finite, or shape differs from
// expected_rows x expected_cols).
PolicyParams CheckpointFromJson(std::string_view text, std::size_t expected_rows,
                                std::size_t expected_cols);

// Agent-card file: JSON array of {card_id, protocol_tag, supported_actions,
// endpoint, cost, metrics: {load, historical_accuracy, avg_latency_ms,
// throughput_rps}}; metrics and throughput_rps are optional. Errors: BadConfig.
std::vector<DiscoveredAgent> AgentCardsFromJson(std::string_view text);
std::string AgentCardsToJson(const std::vector<DiscoveredAgent>& cards);

std::string_view OutcomeFlagName(OutcomeFlag flag);

// SFT dataset: one {features, step, last_outcome, demo_action} object per
// line. demo_action is an action name or index. Blank lines are skipped.
// Error: BadDataset(line_no).
std::vector<SftSample> SftDatasetFromJsonl(std::string_view text, const ObservationEncoder& encoder,
                                           const ActionSpace& actions);
std::string SftDatasetToJsonl(const std::vector<SftSample>& samples, const ActionSpace& actions);

// One trajectory log line (no trailing newline).
std::string TrajectoryLogLine(std::uint64_t episode_id, const EpisodeResult& episode,
                              const RewardVector& rewards, double scalar_reward,
                              const Vocabulary& vocab);

}  // namespace netcollab

#endif  // NETCOLLAB_IO_HPP_
