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
#include <limits>
#include <stdexcept>
#include <vector>

#include "vcgpac/core/errors.hpp"
#include "vcgpac/core/summation.hpp"
#include "vcgpac/env/efficient.hpp"
#include "vcgpac/env/environment.hpp"
#include "vcgpac/env/evaluation_cache.hpp"
#include "vcgpac/mechanism/design_params.hpp"

namespace vcgpac {

/// E[w*], E[w* | t_n] and P[t_n] from one full pass over the profile space.
struct ExactMoments {
  double mean_w = 0.0;
  std::vector<std::vector<double>> cond_mean;  // [n][k]; NaN where P[t_n] = 0
  std::vector<std::vector<double>> marginal;   // [n][k]

  bool positive(std::size_t n, TypeIndex k) const { return marginal[n][k] > 0.0; }

  double conditional(std::size_t n, TypeIndex k) const {
    if (!positive(n, k)) {
      throw ZeroProbabilityError("E[w* | t_n] undefined for a zero-probability type");
    }
    return cond_mean[n][k];
  }
};

template <ValueModel M>
ExactMoments exact_moments(const Environment<M>& env, EvaluationCache& cache) {
  const std::size_t n_players = env.n_players();
  CompensatedSum total;
  std::vector<std::vector<CompensatedSum>> cond(n_players);
  std::vector<std::vector<CompensatedSum>> mass(n_players);
  for (std::size_t n = 0; n < n_players; ++n) {
    cond[n].resize(env.n_types(n));
    mass[n].resize(env.n_types(n));
  }
  env.prior().for_each_profile([&](const TypeProfile& t, std::uint64_t linear, double p) {
    const double pw = p * w_star(env, linear, t, cache);
    total.add(pw);
    for (std::size_t n = 0; n < n_players; ++n) {
      cond[n][t[n]].add(pw);
      mass[n][t[n]].add(p);
    }
  });
  ExactMoments m;
  m.mean_w = total.value();
  m.cond_mean.resize(n_players);
  m.marginal.resize(n_players);
  for (std::size_t n = 0; n < n_players; ++n) {
    for (std::size_t k = 0; k < env.n_types(n); ++k) {
      const double pk = mass[n][k].value();
      m.marginal[n].push_back(pk);
      m.cond_mean[n].push_back(pk > 0.0 ? cond[n][k].value() / pk
                                        : std::numeric_limits<double>::quiet_NaN());
    }
  }
  return m;
}

/// kappa_n(theta) = min over positive-probability t_n of E[w* | t_n] - theta(t_n).
inline double kappa_from_moments(const ExactMoments& m, const DesignParams& params,
                                 std::size_t n) {
  if (n >= m.cond_mean.size()) throw std::out_of_range("player index out of range");
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < m.cond_mean[n].size(); ++k) {
    if (!m.positive(n, static_cast<TypeIndex>(k))) continue;
    best = std::min(best, m.cond_mean[n][k] - params.theta(n, static_cast<TypeIndex>(k)));
  }
  return best;
}

inline std::vector<double> kappa_vector(const ExactMoments& m, const DesignParams& params) {
  std::vector<double> kappa;
  for (std::size_t n = 0; n < m.cond_mean.size(); ++n) {
    kappa.push_back(kappa_from_moments(m, params, n));
  }
  return kappa;
}

template <ValueModel M>
double kappa_exact(const Environment<M>& env, const DesignParams& params, std::size_t n,
                   EvaluationCache& cache) {
  if (n >= env.n_players()) throw std::out_of_range("player index out of range");
  params.check_against(env.space());
  return kappa_from_moments(exact_moments(env, cache), params, n);
}

template <ValueModel M>
double mean_w_exact(const Environment<M>& env, EvaluationCache& cache) {
  return exact_moments(env, cache).mean_w;
}

}  // namespace vcgpac
