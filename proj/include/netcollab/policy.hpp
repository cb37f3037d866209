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

#ifndef NETCOLLAB_POLICY_HPP_
#define NETCOLLAB_POLICY_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace netcollab {

enum class OutcomeFlag { kNone = 0, kAgentSuccess = 1, kAgentFailure = 2 };

// What the core sees before each decision.
struct Observation {
  std::vector<double> features;
  std::size_t step_index = 0;
  OutcomeFlag last_outcome = OutcomeFlag::kNone;

  friend bool operator==(const Observation&, const Observation&) = default;
};

// Task features, then a one-hot step index, then a one-hot outcome flag.
struct ObservationEncoder {
  std::size_t feature_dim = 0;
  std::size_t max_steps = 1;

  std::size_t dim() const { return feature_dim + max_steps + 3; }
  // Throws InvalidArgument on a feature-size mismatch or step >= max_steps.
  std::vector<double> Encode(const Observation& obs) const;

  friend bool operator==(const ObservationEncoder&, const ObservationEncoder&) = default;
};

// Row-major (num_actions x encoded_dim) weight matrix.
class PolicyParams {
 public:
  PolicyParams() = default;
  PolicyParams(std::size_t rows, std::size_t cols);
  PolicyParams(std::size_t rows, std::size_t cols, std::vector<double> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& at(std::size_t r, std::size_t c) { return values_[r * cols_ + c]; }
  double at(std::size_t r, std::size_t c) const { return values_[r * cols_ + c]; }
  const std::vector<double>& values() const { return values_; }
  std::vector<double>& mutable_values() { return values_; }

  // this += scale * other; shapes must agree.
  void AddScaled(const PolicyParams& other, double scale);
  double MaxAbs() const;
  bool AllFinite() const;

  friend bool operator==(const PolicyParams&, const PolicyParams&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> values_;
};

struct SftSample {
  Observation obs;
  std::size_t demo_action = 0;
};

// Linear-softmax decision head: pi(a | o) = softmax(theta encode(o))_a.
class Policy {
 public:
  // All-zero parameters, i.e. the uniform policy.
  Policy(ObservationEncoder encoder, std::size_t num_actions);
  // Throws InvalidArgument on a shape mismatch or non-finite entries.
  Policy(ObservationEncoder encoder, PolicyParams params);

  // A policy that picks `action` with probability exactly 1 at every step.
  static Policy Forced(ObservationEncoder encoder, std::size_t num_actions, std::size_t action);

  const ObservationEncoder& encoder() const { return encoder_; }
  const PolicyParams& params() const { return params_; }
  std::size_t num_actions() const { return params_.rows(); }

  std::vector<double> ActionDistribution(const Observation& obs) const;

  struct LogProbGrad {
    double log_prob = 0.0;
    PolicyParams grad;
  };
  // Gradient of ln pi(action | obs): (onehot(action) - probs) (x) encode(obs).
  LogProbGrad LogProbAndGrad(const Observation& obs, std::size_t action) const;

  double Entropy(const Observation& obs) const;

  // Lowest index among the most probable actions.
  std::size_t Greedy(const Observation& obs) const;

  // Negative mean log-likelihood of the demonstrated actions.
  double SftLoss(std::span<const SftSample> batch) const;
  double MeanDemoProbability(std::span<const SftSample> batch) const;

 private:
  ObservationEncoder encoder_;
  PolicyParams params_;
};

// Entropy of a probability vector, with 0 ln 0 = 0.
double EntropyOf(std::span<const double> probs);

// One gradient-ascent step on the mean demo log-likelihood. An empty batch
// returns the parameters unchanged. learning_rate must be > 0.
PolicyParams SftUpdate(const Policy& policy, std::span<const SftSample> batch,
                       double learning_rate);

}  // namespace netcollab

#endif  // NETCOLLAB_POLICY_HPP_
