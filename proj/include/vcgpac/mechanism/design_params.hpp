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
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vcgpac/env/type_profile.hpp"

namespace vcgpac {

/// Per-player, per-type table of the IR targets theta(t_n).
using ThetaTable = std::vector<std::vector<double>>;

inline ThetaTable zero_theta(std::span<const std::size_t> radices) {
  ThetaTable theta;
  for (std::size_t r : radices) theta.emplace_back(r, 0.0);
  return theta;
}

/// Design targets: theta (per-type expected-utility floor), rho (revenue
/// target) and the bound theta_bar >= max |theta|.
class DesignParams {
 public:
  DesignParams(ThetaTable theta, double rho, std::optional<double> theta_bound = std::nullopt)
      : theta_(std::move(theta)), rho_(rho) {
    double max_abs = 0.0;
    for (const auto& row : theta_) {
      for (double x : row) {
        if (!std::isfinite(x)) throw std::invalid_argument("theta must be finite");
        max_abs = std::max(max_abs, std::fabs(x));
      }
    }
    if (!std::isfinite(rho_)) throw std::invalid_argument("rho must be finite");
    theta_bound_ = theta_bound.value_or(max_abs);
    if (theta_bound_ < max_abs) {
      throw std::invalid_argument("theta_bound " + std::to_string(theta_bound_) +
                                  " is below max |theta| = " + std::to_string(max_abs));
    }
  }

  static DesignParams zero(const ProfileSpace& space, double rho = 0.0) {
    return DesignParams(zero_theta(space.radices()), rho);
  }

  const ThetaTable& theta() const { return theta_; }
  double theta(std::size_t n, TypeIndex k) const { return theta_[n][k]; }
  double rho() const { return rho_; }
  double theta_bound() const { return theta_bound_; }

  void check_against(const ProfileSpace& space) const {
    if (theta_.size() != space.n_players()) {
      throw std::invalid_argument("theta table has the wrong number of players");
    }
    for (std::size_t n = 0; n < theta_.size(); ++n) {
      if (theta_[n].size() != space.radix(n)) {
        throw std::invalid_argument("theta table row " + std::to_string(n) +
                                    " has the wrong number of types");
      }
    }
  }

  DesignParams with_rho(double rho) const { return DesignParams(theta_, rho, theta_bound_); }

 private:
  ThetaTable theta_;
  double rho_;
  double theta_bound_;
};

}  // namespace vcgpac
