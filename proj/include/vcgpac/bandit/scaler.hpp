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

#include <stdexcept>

namespace vcgpac {

/// Affine map [-B, B] -> [0, 1].
class RewardScaler {
 public:
  explicit RewardScaler(double bound) : bound_(bound) {
    if (!(bound > 0.0)) throw std::invalid_argument("reward bound must be positive");
  }

  double scale(double x) const { return (x + bound_) / (2.0 * bound_); }
  double unscale(double y) const { return 2.0 * bound_ * y - bound_; }
  /// Tolerance in raw units -> tolerance in [0, 1] units.
  double scale_tolerance(double eps_raw) const { return eps_raw / (2.0 * bound_); }
  double unscale_tolerance(double eps_scaled) const { return eps_scaled * 2.0 * bound_; }
  double bound() const { return bound_; }

 private:
  double bound_;
};

}  // namespace vcgpac
