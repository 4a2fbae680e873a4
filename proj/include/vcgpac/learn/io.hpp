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

#include <ostream>

#include <fmt/format.h>

#include "json.hpp"
#include "vcgpac/bandit/scaler.hpp"
#include "vcgpac/learn/learn_mechanism.hpp"
#include "vcgpac/mechanism/design_params.hpp"

namespace vcgpac {

inline nlohmann::json to_json(const LearnParams& p) {
  return {{"eps_kappa", p.eps_kappa}, {"eps_lambda", p.eps_lambda},
          {"eps_floor", p.eps_floor}, {"eps_pad", p.eps_pad},
          {"delta_each", p.delta_each}, {"overall_delta", p.overall_delta}};
}

inline nlohmann::json to_json(const LearnTrace& tr) {
  nlohmann::json players = nlohmann::json::array();
  for (std::size_t n = 0; n < tr.per_player.size(); ++n) {
    const KappaEstimate& e = tr.per_player[n];
    players.push_back({{"player", n},
                       {"kappa_hat", e.kappa},
                       {"reward_bound", e.bound},
                       {"eps_scaled", e.eps_scaled},
                       {"arm_types", e.arm_types},
                       {"estimate_scaled", e.bandit.estimate},
                       {"best_arm", e.bandit.best_arm},
                       {"rounds", e.bandit.rounds},
                       {"total_pulls", e.bandit.total_pulls},
                       {"final_radius", e.bandit.final_radius},
                       {"pulls", e.bandit.pulls},
                       {"sample_means", e.bandit.means},
                       {"survivors", e.bandit.survivors}});
  }
  nlohmann::json j = {{"params", to_json(tr.params)},
                      {"rho", tr.rho},
                      {"rho_used", tr.rho_used},
                      {"kappa_hat", tr.kappa_hat},
                      {"mean_w_hat", tr.mean_w_hat},
                      {"lambda_hat", tr.lambda_hat},
                      {"budget", tr.budget},
                      {"simplex_nonempty", tr.simplex_nonempty},
                      {"d_tilde", tr.d_tilde},
                      {"eta", tr.eta},
                      {"kappa_reward_bound", tr.kappa_bound},
                      {"lambda_reward_bound", tr.lambda_bound},
                      {"lambda_samples", tr.lambda_samples},
                      {"total_pulls", tr.total_pulls()},
                      {"cache", {{"unique_evals", tr.unique_evals},
                                 {"total_requests", tr.total_requests}}},
                      {"players", players}};
  return j;
}

/// Per-arm sample paths of every player. sample_mean is the scaled reward
/// mean; cond_mean_w is the implied raw estimate of E[w* | t_n].
inline void write_learn_trace_csv(std::ostream& out, const LearnTrace& tr,
                                  const DesignParams& params) {
  out << "player,type_index,round,arm,pulls,sample_mean,alpha,eliminated_flag,cond_mean_w\n";
  for (std::size_t n = 0; n < tr.per_player.size(); ++n) {
    const KappaEstimate& e = tr.per_player[n];
    const RewardScaler scaler(e.bound);
    for (const TraceRow& r : e.bandit.trace) {
      const TypeIndex k = e.arm_types[r.arm];
      const double raw = params.theta(n, k) - scaler.unscale(r.sample_mean);
      out << fmt::format("{},{},{},{},{},{},{},{},{}\n", n, k, r.round, r.arm, r.pulls,
                         r.sample_mean, r.alpha, r.eliminated ? 1 : 0, raw);
    }
  }
}

}  // namespace vcgpac
