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
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "vcgpac/learn/learn_params.hpp"
#include "vcgpac/mechanism/pivot_rules.hpp"

namespace vcgpac {

/// Result of assembling a pivot rule from estimates. When the simplex
/// {d_n >= eps_floor, sum d_n = budget} is empty no rule can be certified
/// and `rule` is empty.
struct LearnedRule {
  std::optional<ConstantPivotRule> rule;
  std::vector<double> d_tilde;
  double budget = 0.0;
  bool simplex_nonempty = false;
};

/// budget = sum kappa_hat - (N-1)(lambda_hat + eps_pad); picks the point
/// d_n = eps_floor + (budget - N eps_floor) / N and sets eta = kappa_hat - d.
inline LearnedRule learned_pivot_rule(std::span<const double> kappa_hat, double lambda_hat,
                                      const LearnParams& lp) {
  const std::size_t n_players = kappa_hat.size();
  if (n_players == 0) throw std::invalid_argument("no players");
  const auto n = static_cast<double>(n_players);
  LearnedRule out;
  out.budget = std::accumulate(kappa_hat.begin(), kappa_hat.end(), 0.0) -
               (n - 1.0) * (lambda_hat + lp.eps_pad);
  out.simplex_nonempty = out.budget >= n * lp.eps_floor;
  if (!out.simplex_nonempty) return out;
  const double excess = (out.budget - n * lp.eps_floor) / n;
  ConstantPivotRule rule{{}, Provenance::kLearned};
  for (std::size_t i = 0; i < n_players; ++i) {
    out.d_tilde.push_back(lp.eps_floor + excess);
    rule.eta.push_back(kappa_hat[i] - out.d_tilde.back());
  }
  out.rule = std::move(rule);
  return out;
}

}  // namespace vcgpac
