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

#include <concepts>
#include <cstddef>
#include <span>

#include "vcgpac/env/type_profile.hpp"

namespace vcgpac {

/// A value model owns the decision set D and the value function v(d; t_n).
///
/// efficient_decision must return a maximizer of sum_n v(d; t_n) and break
/// ties deterministically. value_bound must satisfy |v(d; t')| <= bound for
/// every decision and every type that can occur.
template <class M>
concept ValueModel =
    std::copy_constructible<M> &&
    requires(const M& m, std::span<const TypeValue> types,
             const typename M::Decision& d, std::size_t n, TypeValue t) {
      typename M::Decision;
      { m.efficient_decision(types) } -> std::same_as<typename M::Decision>;
      { m.value(d, n, t) } -> std::convertible_to<double>;
      { m.value_bound() } -> std::convertible_to<double>;
    };

/// Models that can compute w*(t) without materializing the decision.
template <class M>
concept HasDirectWelfare =
    ValueModel<M> && requires(const M& m, std::span<const TypeValue> types) {
      { m.max_welfare(types) } -> std::convertible_to<double>;
    };

template <ValueModel M>
double welfare(const M& model, const typename M::Decision& d,
               std::span<const TypeValue> types) {
  double total = 0.0;
  for (std::size_t n = 0; n < types.size(); ++n) {
    total += model.value(d, n, types[n]);
  }
  return total;
}

}  // namespace vcgpac
