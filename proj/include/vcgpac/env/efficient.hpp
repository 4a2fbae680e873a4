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
#include <span>
#include <utility>
#include <vector>

#include "vcgpac/env/environment.hpp"
#include "vcgpac/env/evaluation_cache.hpp"
#include "vcgpac/env/value_model.hpp"

namespace vcgpac {

/// w*(t) straight from the model, no caching.
template <ValueModel M>
double compute_w_star(const M& model, std::span<const TypeValue> types) {
  if constexpr (HasDirectWelfare<M>) {
    return static_cast<double>(model.max_welfare(types));
  } else {
    return welfare(model, model.efficient_decision(types), types);
  }
}

namespace detail {

inline std::span<TypeValue> scratch_values(std::size_t n) {
  thread_local std::vector<TypeValue> buffer;
  if (buffer.size() < n) buffer.resize(n);
  return {buffer.data(), n};
}

}  // namespace detail

/// w*(t), served from the cache when possible.
template <ValueModel M>
double w_star(const Environment<M>& env, const TypeProfile& t, EvaluationCache& cache) {
  return cache.get_or_compute(t, [&] {
    auto values = detail::scratch_values(env.n_players());
    env.materialize(t, values);
    return compute_w_star(env.model(), values);
  });
}

/// Same, for callers iterating the space in linear order.
template <ValueModel M>
double w_star(const Environment<M>& env, std::uint64_t linear, const TypeProfile& t,
              EvaluationCache& cache) {
  return cache.get_or_compute(linear, t, [&] {
    auto values = detail::scratch_values(env.n_players());
    env.materialize(t, values);
    return compute_w_star(env.model(), values);
  });
}

/// The efficient decision phi*(t) and its total value w*(t). The decision
/// is always rebuilt; w* goes through the cache so the counters see it.
template <ValueModel M>
std::pair<typename M::Decision, double> efficient_decision(
    const Environment<M>& env, const TypeProfile& t, EvaluationCache& cache) {
  env.check(t);
  const std::vector<TypeValue> values = env.values(t);
  auto decision = env.model().efficient_decision(values);
  const double total = welfare(env.model(), decision, values);
  const double w = cache.get_or_compute(t, [&] { return total; });
  return {std::move(decision), w};
}

/// B = theta_bound + N * v_bar; every reward theta(t_n) - w*(t) lies in [-B, B].
template <ValueModel M>
double reward_bound(const Environment<M>& env, double theta_bound) {
  return theta_bound + static_cast<double>(env.n_players()) * env.value_bound();
}

}  // namespace vcgpac
