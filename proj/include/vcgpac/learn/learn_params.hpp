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
#include <stdexcept>
#include <string>

namespace vcgpac {

/// Per-estimate confidence 1 - (1 - delta)^(1 / (N + 1)), so that N kappa
/// estimates and one lambda estimate jointly hold with probability 1 - delta.
inline double per_estimate_delta(double overall_delta, std::size_t n_players) {
  if (!(overall_delta > 0.0 && overall_delta < 1.0)) {
    throw std::invalid_argument("delta must lie in (0, 1)");
  }
  return -std::expm1(std::log1p(-overall_delta) / static_cast<double>(n_players + 1));
}

/// Accuracy and confidence of the learned pivot rule, all in raw units.
///   eps_kappa:  accuracy of each kappa estimate
///   eps_lambda: accuracy of the lambda estimate
///   eps_floor:  lower bound on every d_n (IR headroom)
///   eps_pad:    padding added to lambda (revenue headroom)
struct LearnParams {
  double eps_kappa = 0.0;
  double eps_lambda = 0.0;
  double eps_floor = 0.0;
  double eps_pad = 0.0;
  double delta_each = 0.0;
  double overall_delta = 0.0;

  /// Floors and pads equal to the estimation accuracies, which makes the
  /// IR and WBB guarantees hold exactly with probability 1 - delta.
  static LearnParams certified(double eps_kappa, double eps_lambda, double overall_delta,
                               std::size_t n_players) {
    LearnParams p;
    p.eps_kappa = eps_kappa;
    p.eps_lambda = eps_lambda;
    p.eps_floor = eps_kappa;
    p.eps_pad = eps_lambda;
    p.overall_delta = overall_delta;
    p.delta_each = per_estimate_delta(overall_delta, n_players);
    p.validate();
    return p;
  }

  void validate() const {
    if (!(eps_kappa > 0.0) || !(eps_lambda > 0.0)) {
      throw std::invalid_argument("estimation accuracies must be positive");
    }
    if (!(eps_floor >= 0.0) || !(eps_pad >= 0.0)) {
      throw std::invalid_argument("floor and padding must be nonnegative");
    }
    if (!(delta_each > 0.0 && delta_each < 1.0)) {
      throw std::invalid_argument("per-estimate delta must lie in (0, 1)");
    }
  }
};

}  // namespace vcgpac
