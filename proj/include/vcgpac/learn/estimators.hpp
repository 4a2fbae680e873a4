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

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "vcgpac/bandit/arms.hpp"
#include "vcgpac/bandit/best_mean.hpp"
#include "vcgpac/bandit/scaler.hpp"
#include "vcgpac/bandit/successive_elimination.hpp"
#include "vcgpac/core/rng.hpp"
#include "vcgpac/env/efficient.hpp"
#include "vcgpac/env/environment.hpp"
#include "vcgpac/env/evaluation_cache.hpp"
#include "vcgpac/mechanism/design_params.hpp"

namespace vcgpac {

struct KappaEstimate {
  double kappa = 0.0;
  BmeResult bandit;
  std::vector<TypeIndex> arm_types;  // arm j pulls type arm_types[j]
  double bound = 1.0;                // reward scaling bound B
  double eps_scaled = 0.0;
};

struct LambdaEstimate {
  double lambda = 0.0;
  double mean_w = 0.0;
  std::uint64_t samples = 0;
  double bound = 1.0;
  double eps_scaled = 0.0;
};

namespace detail {

// An all-zero reward range admits any positive bound.
inline double usable_bound(double b) { return b > 0.0 ? b : 1.0; }

}  // namespace detail

/// Scaling bound for kappa rewards theta(t_n) - w*(t).
template <ValueModel M>
double kappa_reward_bound(const Environment<M>& env, const DesignParams& params) {
  return detail::usable_bound(reward_bound(env, params.theta_bound()));
}

/// Scaling bound for lambda samples w*(t).
template <ValueModel M>
double lambda_reward_bound(const Environment<M>& env) {
  return detail::usable_bound(reward_bound(env, 0.0));
}

/// kappa_n(theta) by best-mean estimation over player n's types. Pulling
/// arm t_n draws t ~ P[. | t_n] and yields the scaled reward of
/// theta(t_n) - w*(t); the best mean is -kappa_n. Types with zero prior
/// probability are not arms.
template <ValueModel M>
KappaEstimate estimate_kappa(const Environment<M>& env, const DesignParams& params,
                             std::size_t n, double eps_raw, double delta_each,
                             EvaluationCache& cache, Rng& rng,
                             const SeOptions& options = {}) {
  if (n >= env.n_players()) throw std::out_of_range("player index out of range");
  params.check_against(env.space());
  KappaEstimate out;
  for (TypeIndex k = 0; k < env.n_types(n); ++k) {
    if (env.prior().marginal(n, k) > 0.0) out.arm_types.push_back(k);
  }
  out.bound = kappa_reward_bound(env, params);
  const RewardScaler scaler(out.bound);
  out.eps_scaled = scaler.scale_tolerance(eps_raw);

  FunctionArms arms(out.arm_types.size(), [&](std::size_t arm, Rng& r) {
    const TypeIndex k = out.arm_types[arm];
    const TypeProfile t = env.prior().sample_conditional(n, k, r);
    return scaler.scale(params.theta(n, k) - w_star(env, t, cache));
  });
  out.bandit = se_bme(arms, out.eps_scaled, delta_each, rng, options);
  out.kappa = 0.0 - scaler.unscale(out.bandit.estimate);
  return out;
}

/// lambda(rho) = E[w*] + rho / (N - 1), with E[w*] from a Hoeffding
/// fixed-budget mean of w*(t), t ~ P.
template <ValueModel M>
LambdaEstimate estimate_lambda(const Environment<M>& env, double rho, double eps_raw,
                               double delta_each, EvaluationCache& cache, Rng& rng) {
  if (env.n_players() < 2) {
    throw std::invalid_argument("lambda needs at least two players");
  }
  LambdaEstimate out;
  out.bound = lambda_reward_bound(env);
  const RewardScaler scaler(out.bound);
  out.eps_scaled = scaler.scale_tolerance(eps_raw);
  const MeanEstimate m = hoeffding_mean(
      [&](Rng& r) { return scaler.scale(w_star(env, env.prior().sample(r), cache)); },
      out.eps_scaled, delta_each, rng);
  out.mean_w = scaler.unscale(m.estimate);
  out.samples = m.samples;
  out.lambda = out.mean_w + rho / static_cast<double>(env.n_players() - 1);
  return out;
}

}  // namespace vcgpac
