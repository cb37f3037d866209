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

#include "netcollab/policy.hpp"

#include <algorithm>
#include <cmath>

#include "netcollab/error.hpp"

namespace netcollab {

namespace {

// Large enough that exp(-kForcedLogit) underflows to exactly 0.
constexpr double kForcedLogit = 1000.0;

}  // namespace

std::vector<double> ObservationEncoder::Encode(const Observation& obs) const {
  if (obs.features.size() != feature_dim) {
    Fail(ErrorCode::kInvalidArgument, "observation feature size mismatch");
  }
  if (obs.step_index >= max_steps) Fail(ErrorCode::kInvalidArgument, "step_index >= max_steps");
  std::vector<double> x(dim(), 0.0);
  std::copy(obs.features.begin(), obs.features.end(), x.begin());
  x[feature_dim + obs.step_index] = 1.0;
  x[feature_dim + max_steps + static_cast<std::size_t>(obs.last_outcome)] = 1.0;
  return x;
}

PolicyParams::PolicyParams(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), values_(rows * cols, 0.0) {}

PolicyParams::PolicyParams(std::size_t rows, std::size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  if (values_.size() != rows * cols) {
    Fail(ErrorCode::kInvalidArgument, "parameter count does not match shape");
  }
}

void PolicyParams::AddScaled(const PolicyParams& other, double scale) {
  if (other.rows_ != rows_ || other.cols_ != cols_) {
    Fail(ErrorCode::kInvalidArgument, "parameter shape mismatch");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += scale * other.values_[i];
}

double PolicyParams::MaxAbs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

bool PolicyParams::AllFinite() const {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

Policy::Policy(ObservationEncoder encoder, std::size_t num_actions)
    : encoder_(encoder), params_(num_actions, encoder.dim()) {
  if (num_actions == 0) Fail(ErrorCode::kInvalidArgument, "policy needs at least one action");
}

Policy::Policy(ObservationEncoder encoder, PolicyParams params)
    : encoder_(encoder), params_(std::move(params)) {
  if (params_.rows() == 0 || params_.cols() != encoder_.dim()) {
    Fail(ErrorCode::kInvalidArgument, "policy parameter shape does not match the encoder");
  }
  if (!params_.AllFinite()) Fail(ErrorCode::kInvalidArgument, "policy parameters must be finite");
}

Policy Policy::Forced(ObservationEncoder encoder, std::size_t num_actions, std::size_t action) {
  if (action >= num_actions) Fail(ErrorCode::kInvalidArgument, "forced action out of range");
  PolicyParams p(num_actions, encoder.dim());
  // Exactly one step bit is set in every encoding.
  for (std::size_t s = 0; s < encoder.max_steps; ++s) p.at(action, encoder.feature_dim + s) = kForcedLogit;
  return Policy(encoder, std::move(p));
}

std::vector<double> Policy::ActionDistribution(const Observation& obs) const {
  const std::vector<double> x = encoder_.Encode(obs);
  std::vector<double> logits(params_.rows(), 0.0);
  for (std::size_t a = 0; a < params_.rows(); ++a) {
    double z = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) z += params_.at(a, j) * x[j];
    logits[a] = z;
  }
  const double m = *std::max_element(logits.begin(), logits.end());
  double total = 0.0;
  for (double& z : logits) {
    z = std::exp(z - m);
    total += z;
  }
  for (double& z : logits) z /= total;
  return logits;
}

Policy::LogProbGrad Policy::LogProbAndGrad(const Observation& obs, std::size_t action) const {
  if (action >= num_actions()) Fail(ErrorCode::kInvalidArgument, "action index out of range");
  const std::vector<double> x = encoder_.Encode(obs);
  const std::vector<double> p = ActionDistribution(obs);
  LogProbGrad out{std::log(p[action]), PolicyParams(params_.rows(), params_.cols())};
  for (std::size_t a = 0; a < params_.rows(); ++a) {
    const double coeff = (a == action ? 1.0 : 0.0) - p[a];
    for (std::size_t j = 0; j < x.size(); ++j) out.grad.at(a, j) = coeff * x[j];
  }
  return out;
}

double EntropyOf(std::span<const double> probs) {
  double h = 0.0;
  for (double p : probs) {
    if (p > 0.0) h -= p * std::log(p);
  }
  return std::max(h, 0.0);
}

double Policy::Entropy(const Observation& obs) const {
  const auto p = ActionDistribution(obs);
  return EntropyOf(p);
}

std::size_t Policy::Greedy(const Observation& obs) const {
  const auto p = ActionDistribution(obs);
  return static_cast<std::size_t>(std::max_element(p.begin(), p.end()) - p.begin());
}

double Policy::SftLoss(std::span<const SftSample> batch) const {
  if (batch.empty()) return 0.0;
  double total = 0.0;
  for (const auto& s : batch) total -= std::log(ActionDistribution(s.obs).at(s.demo_action));
  return total / static_cast<double>(batch.size());
}

double Policy::MeanDemoProbability(std::span<const SftSample> batch) const {
  if (batch.empty()) return 0.0;
  double total = 0.0;
  for (const auto& s : batch) total += ActionDistribution(s.obs).at(s.demo_action);
  return total / static_cast<double>(batch.size());
}

PolicyParams SftUpdate(const Policy& policy, std::span<const SftSample> batch,
                       double learning_rate) {
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
    Fail(ErrorCode::kInvalidArgument, "learning_rate must be > 0");
  }
  PolicyParams next = policy.params();
  if (batch.empty()) return next;
  PolicyParams grad(next.rows(), next.cols());
  for (const auto& s : batch) grad.AddScaled(policy.LogProbAndGrad(s.obs, s.demo_action).grad, 1.0);
  next.AddScaled(grad, learning_rate / static_cast<double>(batch.size()));
  return next;
}

}  // namespace netcollab
