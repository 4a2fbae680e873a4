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

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "vcgpac/bandit/arms.hpp"
#include "vcgpac/bandit/successive_elimination.hpp"
#include "vcgpac/core/rng.hpp"

namespace vcgpac {

/// Fresh pulls of the identified arm that turn an (eps, delta)-PAC BAI
/// into a ((3/2) eps, 2 delta)-PAC BME: ceil((2 / eps^2) ln(1.22 / delta)).
inline std::uint64_t m_star(double eps, double delta) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  if (!(delta > 0.0 && delta < 1.22)) throw std::invalid_argument("delta must lie in (0, 1.22)");
  return static_cast<std::uint64_t>(std::ceil(2.0 / (eps * eps) * std::log(1.22 / delta)));
}

/// Runs SE-BAI, then pulls the chosen arm m_star(eps, delta) more times and
/// reports the mean of those fresh samples only.
template <ArmSet A>
BmeResult bai_to_bme(A& arms, double eps, double delta, Rng& rng, const SeOptions& options = {}) {
  BaiResult bai = se_bai(arms, eps, delta, rng, options);
  const std::uint64_t m = m_star(eps, delta);
  double sum = 0.0;
  for (std::uint64_t i = 0; i < m; ++i) sum += checked_reward(arms.pull(bai.chosen, rng));

  BmeResult out;
  static_cast<EliminationRun&>(out) = std::move(static_cast<EliminationRun&>(bai));
  out.best_arm = bai.chosen;
  out.estimate = sum / static_cast<double>(m);
  out.pulls[bai.chosen] += static_cast<std::size_t>(m);
  out.means[bai.chosen] = out.estimate;
  out.survivors = {bai.chosen};
  out.total_pulls += static_cast<std::size_t>(m);
  return out;
}

struct MeanEstimate {
  double estimate = 0.0;
  std::uint64_t samples = 0;
};

/// Sample size for a two-sided Hoeffding (eps, delta) bound on [0, 1] rewards.
inline std::uint64_t hoeffding_sample_size(double eps, double delta) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in (0, 1)");
  return static_cast<std::uint64_t>(std::ceil(std::log(2.0 / delta) / (2.0 * eps * eps)));
}

/// Fixed-budget sample mean of `sampler(rng)` with rewards in [0, 1].
template <class Sampler>
MeanEstimate hoeffding_mean(Sampler&& sampler, double eps, double delta, Rng& rng) {
  const std::uint64_t m = hoeffding_sample_size(eps, delta);
  double sum = 0.0;
  for (std::uint64_t i = 0; i < m; ++i) sum += checked_reward(sampler(rng));
  return {sum / static_cast<double>(m), m};
}

}  // namespace vcgpac
