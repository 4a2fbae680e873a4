// Copyright 2026 The vcgpac Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vcgpac/core/rng.hpp"

namespace vcgpac {

/// K arms with rewards in [0, 1]; pull(k, rng) draws one reward from arm k.
template <class A>
concept ArmSet = requires(A& arms, std::size_t k, Rng& rng) {
  { arms.size() } -> std::convertible_to<std::size_t>;
  { arms.pull(k, rng) } -> std::convertible_to<double>;
};

/// Rejects rewards outside [0, 1]; a rounding overshoot of 1e-12 is clamped.
inline double checked_reward(double r) {
  constexpr double kSlack = 1e-12;
  if (!(r >= -kSlack && r <= 1.0 + kSlack)) {
    throw std::out_of_range("arm reward " + std::to_string(r) + " outside [0, 1]");
  }
  return r < 0.0 ? 0.0 : (r > 1.0 ? 1.0 : r);
}

/// Arms backed by a callable `fn(k, rng) -> double`.
template <class Fn>
class FunctionArms {
 public:
  FunctionArms(std::size_t k, Fn fn) : k_(k), fn_(std::move(fn)) {}
  std::size_t size() const { return k_; }
  double pull(std::size_t k, Rng& rng) { return fn_(k, rng); }

 private:
  std::size_t k_;
  Fn fn_;
};

template <class Fn>
FunctionArms(std::size_t, Fn) -> FunctionArms<Fn>;

class BernoulliArms {
 public:
  explicit BernoulliArms(std::vector<double> means) : means_(std::move(means)) {
    for (double m : means_) {
      if (!(m >= 0.0 && m <= 1.0)) throw std::invalid_argument("Bernoulli mean outside [0, 1]");
    }
  }
  std::size_t size() const { return means_.size(); }
  double pull(std::size_t k, Rng& rng) { return rng.bernoulli(means_[k]) ? 1.0 : 0.0; }
  const std::vector<double>& means() const { return means_; }

 private:
  std::vector<double> means_;
};

/// Equally separated means (k - 0.5) / K, k = 1..K.
inline std::vector<double> bernoulli_ladder(std::size_t k_arms) {
  std::vector<double> means;
  for (std::size_t k = 1; k <= k_arms; ++k) {
    means.push_back((static_cast<double>(k) - 0.5) / static_cast<double>(k_arms));
  }
  return means;
}

}  // namespace vcgpac
