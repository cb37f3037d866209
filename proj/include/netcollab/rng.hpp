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

#ifndef NETCOLLAB_RNG_HPP_
#define NETCOLLAB_RNG_HPP_

#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>

namespace netcollab {

// Seedable stream with platform-independent output.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the
// standard. The standard distributions are not, so the mappings to [0, 1)
// and to categorical indices are done here by hand. A stream is identified by
// a base seed plus a path of stream indices, e.g. (seed, iteration, rollout),
// expanded through std::seed_seq.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::initializer_list<std::uint64_t> stream = {});

  std::uint64_t NextU64() { return engine_(); }

  // Uniform double in [0, 1) with 53 random bits.
  double Uniform();

  // Uniform double in [lo, hi).
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }

  bool Bernoulli(double p) { return Uniform() < p; }

  // Inverse-CDF draw over unnormalized nonnegative weights. Entries with zero
  // weight are never selected.
  std::size_t Categorical(std::span<const double> weights);

 private:
  std::mt19937_64 engine_;
};

}  // namespace netcollab

#endif  // NETCOLLAB_RNG_HPP_
