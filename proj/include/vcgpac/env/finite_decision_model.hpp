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
#include <functional>
#include <span>
#include <stdexcept>
#include <utility>

#include "vcgpac/env/type_profile.hpp"

namespace vcgpac {

/// Value model over an explicit finite decision set {0, ..., D-1} with a
/// user-supplied value function v(d, n, t_n). The efficient decision is found
/// by scanning every decision; the lowest index wins ties.
class FiniteDecisionModel {
 public:
  using Decision = std::size_t;
  using ValueFn = std::function<double(std::size_t decision, std::size_t player,
                                       TypeValue type)>;

  FiniteDecisionModel(std::size_t n_decisions, ValueFn value, double value_bound)
      : n_decisions_(n_decisions), value_(std::move(value)), value_bound_(value_bound) {
    if (n_decisions_ == 0) throw std::invalid_argument("empty decision set");
    if (!value_) throw std::invalid_argument("missing value function");
  }

  Decision efficient_decision(std::span<const TypeValue> types) const {
    Decision best = 0;
    double best_total = total(0, types);
    for (Decision d = 1; d < n_decisions_; ++d) {
      const double w = total(d, types);
      if (w > best_total) {
        best = d;
        best_total = w;
      }
    }
    return best;
  }

  double value(Decision d, std::size_t n, TypeValue t) const { return value_(d, n, t); }
  double value_bound() const { return value_bound_; }
  std::size_t n_decisions() const { return n_decisions_; }

 private:
  double total(Decision d, std::span<const TypeValue> types) const {
    double w = 0.0;
    for (std::size_t n = 0; n < types.size(); ++n) w += value_(d, n, types[n]);
    return w;
  }

  std::size_t n_decisions_;
  ValueFn value_;
  double value_bound_;
};

}  // namespace vcgpac
