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
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "vcgpac/bandit/arms.hpp"
#include "vcgpac/core/rng.hpp"

namespace vcgpac {

/// One row of the per-round sample path: arm state after round `round`.
struct TraceRow {
  std::size_t round = 0;
  std::size_t arm = 0;
  std::size_t pulls = 0;
  double sample_mean = 0.0;
  double alpha = 0.0;
  bool eliminated = false;
};

struct SeOptions {
  bool record_trace = false;
  // Keep every stride-th round; rounds with eliminations and the final
  // round are always kept.
  std::size_t trace_stride = 1;
};

/// State shared by both successive-elimination variants at termination.
struct EliminationRun {
  std::size_t rounds = 0;
  std::vector<std::size_t> pulls;
  std::vector<double> means;
  std::vector<std::size_t> survivors;
  std::size_t total_pulls = 0;
  double final_radius = 1.0;
  std::vector<TraceRow> trace;
};

struct BmeResult : EliminationRun {
  double estimate = 0.0;
  std::size_t best_arm = 0;  // survivor attaining the estimate
};

struct BaiResult : EliminationRun {
  std::size_t chosen = 0;
};

/// Confidence radius of SE-BME after t rounds over K arms.
inline double se_bme_radius(std::size_t t, std::size_t k_arms, double delta) {
  const double td = static_cast<double>(t);
  const double pi2 = std::numbers::pi * std::numbers::pi;
  return std::sqrt(std::log(pi2 * static_cast<double>(k_arms) * td * td / (3.0 * delta)) /
                   (2.0 * td));
}

/// Confidence radius of SE-BAI after t rounds over K arms.
inline double se_bai_radius(std::size_t t, std::size_t k_arms, double delta) {
  const double td = static_cast<double>(t);
  const double pi2 = std::numbers::pi * std::numbers::pi;
  return std::sqrt(std::log(pi2 * static_cast<double>(k_arms) * td * td / (6.0 * delta)) /
                   (2.0 * td));
}

namespace detail {

inline void check_pac(double eps, double delta) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw std::invalid_argument("eps must lie in (0, 1), got " + std::to_string(eps));
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("delta must lie in (0, 1), got " + std::to_string(delta));
  }
}

// Lowest-index survivor with the largest sample mean.
inline std::size_t leader(const std::vector<std::size_t>& survivors,
                          const std::vector<double>& means) {
  std::size_t best = survivors.front();
  for (std::size_t k : survivors) {
    if (means[k] > means[best]) best = k;
  }
  return best;
}

// Each round pulls every survivor once, then drops arms whose sample mean
// trails the leader by at least 2 * alpha.
template <ArmSet A, class Radius, class KeepGoing>
EliminationRun successive_elimination(A& arms, Rng& rng, Radius radius, KeepGoing keep_going,
                                      const SeOptions& options) {
  const std::size_t k_arms = arms.size();
  if (k_arms == 0) throw std::invalid_argument("bandit needs at least one arm");
  const std::size_t stride = options.trace_stride == 0 ? 1 : options.trace_stride;

  EliminationRun run;
  run.pulls.assign(k_arms, 0);
  run.means.assign(k_arms, 0.0);
  std::vector<double> sums(k_arms, 0.0);
  for (std::size_t k = 0; k < k_arms; ++k) run.survivors.push_back(k);

  double alpha = 1.0;
  std::vector<std::size_t> kept;
  while (keep_going(alpha, run.survivors.size())) {
    for (std::size_t k : run.survivors) {
      sums[k] += checked_reward(arms.pull(k, rng));
      ++run.pulls[k];
      run.means[k] = sums[k] / static_cast<double>(run.pulls[k]);
    }
    run.total_pulls += run.survivors.size();
    ++run.rounds;
    alpha = radius(run.rounds);

    const double top = run.means[leader(run.survivors, run.means)];
    kept.clear();
    for (std::size_t k : run.survivors) {
      if (!(top - run.means[k] >= 2.0 * alpha)) kept.push_back(k);
    }

    if (options.record_trace) {
      const bool eliminated_any = kept.size() != run.survivors.size();
      const bool last = !keep_going(alpha, kept.size());
      if (run.rounds % stride == 0 || eliminated_any || last || run.rounds == 1) {
        std::size_t j = 0;
        for (std::size_t k : run.survivors) {
          const bool survived = j < kept.size() && kept[j] == k;
          if (survived) ++j;
          run.trace.push_back({run.rounds, k, run.pulls[k], run.means[k], alpha, !survived});
        }
      }
    }
    run.survivors.swap(kept);
  }
  run.final_radius = alpha;
  return run;
}

}  // namespace detail

/// Successive elimination for best-mean estimation: an (eps, delta)-PAC
/// estimate of max_k mu_k for rewards in [0, 1].
template <ArmSet A>
BmeResult se_bme(A& arms, double eps, double delta, Rng& rng, const SeOptions& options = {}) {
  detail::check_pac(eps, delta);
  const std::size_t k_arms = arms.size();
  BmeResult result;
  static_cast<EliminationRun&>(result) = detail::successive_elimination(
      arms, rng, [&](std::size_t t) { return se_bme_radius(t, k_arms, delta); },
      [eps](double alpha, std::size_t) { return alpha > eps; }, options);
  result.best_arm = detail::leader(result.survivors, result.means);
  result.estimate = result.means[result.best_arm];
  return result;
}

/// Successive elimination for best-arm identification: an (eps, delta)-PAC
/// choice of an eps-optimal arm.
template <ArmSet A>
BaiResult se_bai(A& arms, double eps, double delta, Rng& rng, const SeOptions& options = {}) {
  detail::check_pac(eps, delta);
  const std::size_t k_arms = arms.size();
  BaiResult result;
  static_cast<EliminationRun&>(result) = detail::successive_elimination(
      arms, rng, [&](std::size_t t) { return se_bai_radius(t, k_arms, delta); },
      [eps](double alpha, std::size_t remaining) { return remaining > 1 && alpha > eps / 2.0; },
      options);
  result.chosen = detail::leader(result.survivors, result.means);
  return result;
}

}  // namespace vcgpac
