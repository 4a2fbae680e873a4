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
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "vcgpac/bandit/successive_elimination.hpp"
#include "vcgpac/core/parallel.hpp"
#include "vcgpac/core/rng.hpp"
#include "vcgpac/env/environment.hpp"
#include "vcgpac/env/evaluation_cache.hpp"
#include "vcgpac/learn/estimators.hpp"
#include "vcgpac/learn/learn_params.hpp"
#include "vcgpac/learn/learned_rule.hpp"
#include "vcgpac/mechanism/design_params.hpp"
#include "vcgpac/mechanism/feasibility.hpp"
#include "vcgpac/mechanism/pivot_rules.hpp"
#include "vcgpac/mechanism/vcg.hpp"

namespace vcgpac {

struct LearnOptions {
  // Revenue target used in lambda in place of params.rho().
  std::optional<double> rho_prime;
  SeOptions bandit;
  // Worker threads for the per-player kappa estimates; 0 or 1 runs serially.
  std::size_t threads = 1;
};

struct LearnTrace {
  LearnParams params;
  double rho = 0.0;       // design target
  double rho_used = 0.0;  // value entering lambda (rho' when given)
  std::vector<double> kappa_hat;
  double mean_w_hat = 0.0;
  double lambda_hat = 0.0;
  std::vector<double> d_tilde;
  std::vector<double> eta;
  double budget = 0.0;
  bool simplex_nonempty = false;
  double kappa_bound = 1.0;
  double lambda_bound = 1.0;
  std::uint64_t lambda_samples = 0;
  std::uint64_t unique_evals = 0;    // added to the cache during learning
  std::uint64_t total_requests = 0;  // issued during learning
  std::vector<KappaEstimate> per_player;

  std::size_t total_pulls() const {
    std::size_t s = static_cast<std::size_t>(lambda_samples);
    for (const auto& p : per_player) s += p.bandit.total_pulls;
    return s;
  }
};

template <ValueModel M>
struct LearnOutcome {
  std::optional<Mechanism<M>> mechanism;
  LearnTrace trace;
};

/// Player n's kappa stream is substream n of the seed; lambda uses substream N.
inline Rng kappa_stream(std::uint64_t seed, std::size_t n) { return Rng::substream(seed, n); }
inline Rng lambda_stream(std::uint64_t seed, std::size_t n_players) {
  return Rng::substream(seed, n_players);
}

/// Runs the N + 1 estimators and assembles the learned rule.
template <ValueModel M>
LearnOutcome<M> learn_mechanism(const Environment<M>& env, const DesignParams& params,
                                double eps_kappa_raw, double eps_lambda_raw,
                                double overall_delta, std::uint64_t seed,
                                EvaluationCache& cache, const LearnOptions& options = {}) {
  const std::size_t n_players = env.n_players();
  if (n_players < 2) throw std::invalid_argument("learning needs at least two players");
  params.check_against(env.space());

  LearnOutcome<M> out;
  LearnTrace& tr = out.trace;
  tr.params = LearnParams::certified(eps_kappa_raw, eps_lambda_raw, overall_delta, n_players);
  tr.rho = params.rho();
  tr.rho_used = options.rho_prime.value_or(params.rho());
  const std::uint64_t unique0 = cache.unique_evals();
  const std::uint64_t total0 = cache.total_requests();

  tr.per_player.resize(n_players);
  auto run_player = [&](std::size_t n) {
    Rng rng = kappa_stream(seed, n);
    tr.per_player[n] = estimate_kappa(env, params, n, tr.params.eps_kappa,
                                      tr.params.delta_each, cache, rng, options.bandit);
  };
  parallel_for(n_players, options.threads, run_player);

  Rng lrng = lambda_stream(seed, n_players);
  const LambdaEstimate lam = estimate_lambda(env, tr.rho_used, tr.params.eps_lambda,
                                             tr.params.delta_each, cache, lrng);
  tr.kappa_bound = tr.per_player.front().bound;
  tr.lambda_bound = lam.bound;
  tr.lambda_samples = lam.samples;
  tr.mean_w_hat = lam.mean_w;
  tr.lambda_hat = lam.lambda;
  for (const auto& p : tr.per_player) tr.kappa_hat.push_back(p.kappa);

  LearnedRule rule = learned_pivot_rule(tr.kappa_hat, tr.lambda_hat, tr.params);
  tr.budget = rule.budget;
  tr.simplex_nonempty = rule.simplex_nonempty;
  tr.d_tilde = std::move(rule.d_tilde);
  tr.unique_evals = cache.unique_evals() - unique0;
  tr.total_requests = cache.total_requests() - total0;
  if (rule.rule) {
    tr.eta = rule.rule->eta;
    out.mechanism.emplace(env, std::move(*rule.rule));
  }
  return out;
}

/// Same, with a fresh hashed cache.
template <ValueModel M>
LearnOutcome<M> learn_mechanism(const Environment<M>& env, const DesignParams& params,
                                double eps_kappa_raw, double eps_lambda_raw,
                                double overall_delta, std::uint64_t seed,
                                const LearnOptions& options = {}) {
  EvaluationCache cache(env.space());
  return learn_mechanism(env, params, eps_kappa_raw, eps_lambda_raw, overall_delta, seed,
                         cache, options);
}

enum class PlugInRule { kSbb, kIr };

/// Treats the estimates as if exact: the feasibility slack at target rho is
/// split uniformly (SBB) or clamped at zero (IR).
inline ConstantPivotRule plug_in_rule(std::span<const double> kappa_hat, double mean_w_hat,
                                      double rho, PlugInRule kind) {
  const FeasibilityReport r =
      feasibility_condition(kappa_hat, mean_w_hat, rho, kappa_hat.size());
  ConstantPivotRule rule =
      kind == PlugInRule::kSbb ? pivot_rule_sbb(r, uniform_allocation(r)) : pivot_rule_ir(r);
  rule.provenance = Provenance::kLearned;
  return rule;
}

}  // namespace vcgpac
