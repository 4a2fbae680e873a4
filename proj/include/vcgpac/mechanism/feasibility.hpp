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
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "vcgpac/env/prior.hpp"

namespace vcgpac {

/// Tolerance for equalities that hold exactly in real arithmetic.
constexpr double kExactTolerance = 1e-9;

/// The feasibility condition sum_n kappa_n - (N-1) E[w*] - rho >= 0 and
/// the quantities that enter it. `slack` is also the simplex budget.
struct FeasibilityReport {
  std::vector<double> kappa;
  double mean_w = 0.0;
  double rho = 0.0;
  double slack = 0.0;
  bool feasible_by_condition = false;

  std::size_t n_players() const { return kappa.size(); }
};

inline FeasibilityReport feasibility_condition(std::span<const double> kappa, double mean_w,
                                               double rho, std::size_t n_players) {
  if (kappa.size() != n_players) {
    throw std::invalid_argument("kappa vector length does not match the player count");
  }
  FeasibilityReport r;
  r.kappa.assign(kappa.begin(), kappa.end());
  r.mean_w = mean_w;
  r.rho = rho;
  const double sum_kappa = std::accumulate(kappa.begin(), kappa.end(), 0.0);
  const double committed = static_cast<double>(n_players - 1) * mean_w;
  r.slack = sum_kappa - committed - rho;
  // A slack that is zero in exact arithmetic (the feasibility-forcing theta
  // and rho land there) must not flip sign through rounding.
  const double scale = std::fabs(sum_kappa) + std::fabs(committed) + std::fabs(rho) + 1.0;
  if (std::fabs(r.slack) <= 1e-12 * scale) r.slack = 0.0;
  r.feasible_by_condition = r.slack >= 0.0;
  return r;
}

enum class Verdict { kFeasible, kInfeasible, kUnknown };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kFeasible: return "feasible";
    case Verdict::kInfeasible: return "infeasible";
    case Verdict::kUnknown: default: return "unknown";
  }
}

/// The condition is necessary only for independent types; with dependent
/// types a negative slack leaves the question open.
inline Verdict classify(const FeasibilityReport& r, PriorKind kind) {
  if (r.feasible_by_condition) return Verdict::kFeasible;
  return kind == PriorKind::kIndependent ? Verdict::kInfeasible : Verdict::kUnknown;
}

}  // namespace vcgpac
