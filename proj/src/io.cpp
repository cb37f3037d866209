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

#include "netcollab/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "netcollab/error.hpp"

namespace netcollab {

using nlohmann::json;

namespace {

const json& Require(const json& obj, const char* key, ErrorCode code, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) Fail(code, where + ": missing key '" + key + "'");
  return *it;
}

double RequireNumber(const json& obj, const char* key, ErrorCode code, const std::string& where) {
  const json& v = Require(obj, key, code, where);
  if (!v.is_number()) Fail(code, where + ": '" + key + "' must be a number");
  return v.get<double>();
}

std::string TerminalKindName(Terminal::Kind k) {
  switch (k) {
    case Terminal::Kind::kOpen: return "open";
    case Terminal::Kind::kAnswered: return "answered";
    case Terminal::Kind::kTruncated: return "truncated";
    case Terminal::Kind::kFailed: return "failed";
  }
  return "open";
}

}  // namespace

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorCode::kIo, "cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) Fail(ErrorCode::kIo, "cannot open '" + path + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) Fail(ErrorCode::kIo, "failed writing '" + path + "'");
}

std::string CheckpointToJson(const PolicyParams& params) {
  json j;
  j["shape"] = {params.rows(), params.cols()};
  j["values"] = params.values();
  return j.dump() + "\n";
}

PolicyParams CheckpointFromJson(std::string_view text, std::size_t expected_rows,
                                std::size_t expected_cols) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) Fail(ErrorCode::kBadCheckpoint, "BadCheckpoint: not a JSON object");
  const json& shape = Require(j, "shape", ErrorCode::kBadCheckpoint, "BadCheckpoint");
  const json& values = Require(j, "values", ErrorCode::kBadCheckpoint, "BadCheckpoint");
  if (!shape.is_array() || shape.size() != 2 || !shape[0].is_number_unsigned() ||
      !shape[1].is_number_unsigned()) {
    Fail(ErrorCode::kBadCheckpoint, "BadCheckpoint: shape must be [rows, cols]");
  }
  const auto rows = shape[0].get<std::size_t>();
  const auto cols = shape[1].get<std::size_t>();
  if (rows != expected_rows || cols != expected_cols) {
    Fail(ErrorCode::kBadCheckpoint,
         "BadCheckpoint: shape [" + std::to_string(rows) + "," + std::to_string(cols) +
             "] does not match the policy [" + std::to_string(expected_rows) + "," +
             std::to_string(expected_cols) + "]");
  }
  if (!values.is_array() || values.size() != rows * cols) {
    Fail(ErrorCode::kBadCheckpoint, "BadCheckpoint: values length does not match shape");
  }
  std::vector<double> v;
  v.reserve(values.size());
  for (const auto& x : values) {
    if (!x.is_number() || !std::isfinite(x.get<double>())) {
      Fail(ErrorCode::kBadCheckpoint, "BadCheckpoint: values must be finite numbers");
    }
    v.push_back(x.get<double>());
  }
  return PolicyParams(rows, cols, std::move(v));
}

std::vector<DiscoveredAgent> AgentCardsFromJson(std::string_view text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_array()) Fail(ErrorCode::kBadConfig, "agent cards must be a JSON array");
  std::vector<DiscoveredAgent> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& c = j[i];
    const std::string where = "agent card #" + std::to_string(i);
    if (!c.is_object()) Fail(ErrorCode::kBadConfig, where + " must be an object");
    DiscoveredAgent a;
    const json& id = Require(c, "card_id", ErrorCode::kBadConfig, where);
    if (!id.is_string()) Fail(ErrorCode::kBadConfig, where + ": card_id must be a string");
    a.card.card_id = id.get<std::string>();
    a.card.protocol_tag = c.value("protocol_tag", std::string("native"));
    const json& actions = Require(c, "supported_actions", ErrorCode::kBadConfig, where);
    if (!actions.is_array()) Fail(ErrorCode::kBadConfig, where + ": supported_actions must be an array");
    for (const auto& s : actions) {
      if (!s.is_string()) Fail(ErrorCode::kBadConfig, where + ": supported_actions must hold strings");
      a.card.supported_actions.insert(s.get<std::string>());
    }
    a.card.endpoint = c.value("endpoint", std::string());
    a.card.cost = c.contains("cost") ? RequireNumber(c, "cost", ErrorCode::kBadConfig, where) : 0.0;
    if (auto m = c.find("metrics"); m != c.end()) {
      if (!m->is_object()) Fail(ErrorCode::kBadConfig, where + ": metrics must be an object");
      a.metrics.load = RequireNumber(*m, "load", ErrorCode::kBadConfig, where);
      a.metrics.historical_accuracy =
          RequireNumber(*m, "historical_accuracy", ErrorCode::kBadConfig, where);
      a.metrics.avg_latency_ms = RequireNumber(*m, "avg_latency_ms", ErrorCode::kBadConfig, where);
      if (m->contains("throughput_rps")) {
        a.metrics.throughput_rps = RequireNumber(*m, "throughput_rps", ErrorCode::kBadConfig, where);
      }
    }
    out.push_back(std::move(a));
  }
  return out;
}

std::string AgentCardsToJson(const std::vector<DiscoveredAgent>& cards) {
  json arr = json::array();
  for (const auto& a : cards) {
    arr.push_back({{"card_id", a.card.card_id},
                   {"protocol_tag", a.card.protocol_tag},
                   {"supported_actions", a.card.supported_actions},
                   {"endpoint", a.card.endpoint},
                   {"cost", a.card.cost},
                   {"metrics",
                    {{"load", a.metrics.load},
                     {"historical_accuracy", a.metrics.historical_accuracy},
                     {"avg_latency_ms", a.metrics.avg_latency_ms},
                     {"throughput_rps", a.metrics.throughput_rps}}}});
  }
  return arr.dump(2) + "\n";
}

std::string_view OutcomeFlagName(OutcomeFlag flag) {
  switch (flag) {
    case OutcomeFlag::kNone: return "none";
    case OutcomeFlag::kAgentSuccess: return "agent_success";
    case OutcomeFlag::kAgentFailure: return "agent_failure";
  }
  return "none";
}

std::vector<SftSample> SftDatasetFromJsonl(std::string_view text, const ObservationEncoder& encoder,
                                           const ActionSpace& actions) {
  std::vector<SftSample> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;

    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw BadDatasetError(line_no, "not a JSON object");
    SftSample s;
    auto features = j.find("features");
    if (features == j.end() || !features->is_array()) {
      throw BadDatasetError(line_no, "'features' must be an array");
    }
    for (const auto& f : *features) {
      if (!f.is_number()) throw BadDatasetError(line_no, "features must be numbers");
      s.obs.features.push_back(f.get<double>());
    }
    if (s.obs.features.size() != encoder.feature_dim) {
      throw BadDatasetError(line_no, "expected " + std::to_string(encoder.feature_dim) + " features");
    }
    auto step = j.find("step");
    if (step == j.end() || !step->is_number_unsigned() || step->get<std::size_t>() >= encoder.max_steps) {
      throw BadDatasetError(line_no, "'step' must be an integer below max_steps");
    }
    s.obs.step_index = step->get<std::size_t>();
    const std::string outcome = j.value("last_outcome", std::string("none"));
    if (outcome == "none") {
      s.obs.last_outcome = OutcomeFlag::kNone;
    } else if (outcome == "agent_success") {
      s.obs.last_outcome = OutcomeFlag::kAgentSuccess;
    } else if (outcome == "agent_failure") {
      s.obs.last_outcome = OutcomeFlag::kAgentFailure;
    } else {
      throw BadDatasetError(line_no, "unknown last_outcome '" + outcome + "'");
    }
    auto demo = j.find("demo_action");
    if (demo == j.end()) throw BadDatasetError(line_no, "missing 'demo_action'");
    if (demo->is_number_unsigned()) {
      s.demo_action = demo->get<std::size_t>();
      if (s.demo_action >= actions.size()) throw BadDatasetError(line_no, "demo_action out of range");
    } else if (demo->is_string()) {
      auto idx = actions.IndexOf(demo->get<std::string>());
      if (!idx) throw BadDatasetError(line_no, "unknown demo_action '" + demo->get<std::string>() + "'");
      s.demo_action = *idx;
    } else {
      throw BadDatasetError(line_no, "demo_action must be a name or index");
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::string SftDatasetToJsonl(const std::vector<SftSample>& samples, const ActionSpace& actions) {
  std::string out;
  for (const auto& s : samples) {
    json j{{"features", s.obs.features},
           {"step", s.obs.step_index},
           {"last_outcome", OutcomeFlagName(s.obs.last_outcome)},
           {"demo_action", actions.Name(s.demo_action)}};
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::string TrajectoryLogLine(std::uint64_t episode_id, const EpisodeResult& episode,
                              const RewardVector& rewards, double scalar_reward,
                              const Vocabulary& vocab) {
  json segments = json::array();
  for (const Segment& s : episode.trajectory.segments()) {
    json seg{{"source", SourceName(s.source())}};
    if (s.source() == SegmentSource::kAgent) seg["card_id"] = s.card_id();
    seg["tokens"] = vocab.Names(s.tokens());
    seg["loss_included"] = s.loss_included();
    segments.push_back(std::move(seg));
  }
  const Terminal& t = episode.trajectory.terminal();
  json terminal{{"kind", TerminalKindName(t.kind)}};
  if (t.kind == Terminal::Kind::kAnswered) terminal["token"] = vocab.Name(t.answer);
  if (t.reason) terminal["reason"] = FailureKindName(t.reason->kind);

  json line{{"episode_id", episode_id},
            {"segments", std::move(segments)},
            {"terminal", std::move(terminal)},
            {"reward_vector",
             {{"accuracy", rewards.accuracy},
              {"format", rewards.format},
              {"efficiency", rewards.efficiency},
              {"qos", rewards.qos},
              {"exploration", rewards.exploration}}},
            {"scalar_reward", scalar_reward}};
  return line.dump();
}

}  // namespace netcollab
