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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "vcgpac/mechanism/design_params.hpp"
#include "vcgpac/mechanism/exact.hpp"
#include "vcgpac/mechanism/feasibility.hpp"

namespace vcgpac {

enum class Provenance { kExactSbb, kExactIr, kLearned };

inline const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::kExactSbb: return "exact_sbb";
    case Provenance::kExactIr: return "exact_ir";
    case Provenance::kLearned: default: return "learned";
  }
}

/// h_n(t_{-n}) = eta_n for every t_{-n}.
struct ConstantPivotRule {
  std::vector<double> eta;
  Provenance provenance = Provenance::kExactSbb;

  std::size_t n_players() const { return eta.size(); }
};

/// A split of the slack across players: delta_n >= 0, sum = budget.
struct SimplexAllocation {
  std::vector<double> delta;
  double budget = 0.0;
};

inline SimplexAllocation uniform_allocation(const FeasibilityReport& report) {
  const auto n = static_cast<double>(report.n_players());
  return {std::vector<double>(report.n_players(), report.slack / n), report.slack};
}

/// Splits the slack proportionally to nonnegative weights.
inline SimplexAllocation weighted_allocation(const FeasibilityReport& report,
                                             std::span<const double> weights) {
  if (weights.size() != report.n_players()) {
    throw std::invalid_argument("allocation weights have the wrong length");
  }
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (!(total > 0.0) ||
      std::any_of(weights.begin(), weights.end(), [](double w) { return !(w >= 0.0); })) {
    throw std::invalid_argument("allocation weights must be nonnegative with positive sum");
  }
  SimplexAllocation a{{}, report.slack};
  for (double w : weights) a.delta.push_back(report.slack * w / total);
  return a;
}

/// eta_n = kappa_n - delta_n. Exact expected revenue equals rho whenever the
/// allocation sums to the slack, whether or not every delta_n is >= 0.
inline ConstantPivotRule pivot_rule_sbb(const FeasibilityReport& report,
                                        const SimplexAllocation& alloc) {
  if (alloc.delta.size() != report.n_players()) {
    throw std::invalid_argument("allocation length does not match the player count");
  }
  if (std::fabs(alloc.budget - report.slack) > kExactTolerance) {
    throw std::invalid_argument("allocation budget " + std::to_string(alloc.budget) +
                                " does not equal the slack " + std::to_string(report.slack));
  }
  const double sum = std::accumulate(alloc.delta.begin(), alloc.delta.end(), 0.0);
  if (std::fabs(sum - alloc.budget) > kExactTolerance) {
    throw std::invalid_argument("allocation does not sum to its budget");
  }
  ConstantPivotRule rule{{}, Provenance::kExactSbb};
  for (std::size_t n = 0; n < report.n_players(); ++n) {
    rule.eta.push_back(report.kappa[n] - alloc.delta[n]);
  }
  return rule;
}

/// eta_n = kappa_n - max(slack / N, 0): theta-IR always, rho-SBB when slack >= 0.
inline ConstantPivotRule pivot_rule_ir(const FeasibilityReport& report) {
  const double delta =
      std::max(report.slack / static_cast<double>(report.n_players()), 0.0);
  ConstantPivotRule rule{{}, Provenance::kExactIr};
  for (double k : report.kappa) rule.eta.push_back(k - delta);
  return rule;
}

/// rho = min(slack_0, 0), slack_0 taken at theta = 0, rho = 0.
inline double rho_for_feasibility(const ExactMoments& m) {
  std::vector<std::size_t> radices;
  for (const auto& row : m.cond_mean) radices.push_back(row.size());
  const DesignParams zero = DesignParams(zero_theta(radices), 0.0);
  const auto report =
      feasibility_condition(kappa_vector(m, zero), m.mean_w, 0.0, m.cond_mean.size());
  return std::min(report.slack, 0.0);
}

template <ValueModel M>
double rho_for_feasibility(const Environment<M>& env, EvaluationCache& cache) {
  return rho_for_feasibility(exact_moments(env, cache));
}

/// theta(t_n) = min(E[w* | t_n] - ((N-1)/N) E[w*], 0); zero-probability
/// types get 0. Together with rho = 0 this makes the slack nonnegative.
inline ThetaTable theta_for_feasibility(const ExactMoments& m) {
  const auto n_players = static_cast<double>(m.cond_mean.size());
  const double share = (n_players - 1.0) / n_players * m.mean_w;
  ThetaTable theta(m.cond_mean.size());
  for (std::size_t n = 0; n < m.cond_mean.size(); ++n) {
    for (std::size_t k = 0; k < m.cond_mean[n].size(); ++k) {
      theta[n].push_back(m.positive(n, static_cast<TypeIndex>(k))
                             ? std::min(m.cond_mean[n][k] - share, 0.0)
                             : 0.0);
    }
  }
  return theta;
}

template <ValueModel M>
ThetaTable theta_for_feasibility(const Environment<M>& env, EvaluationCache& cache) {
  return theta_for_feasibility(exact_moments(env, cache));
}

}  // namespace vcgpac
