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
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "vcgpac/core/errors.hpp"
#include "vcgpac/core/summation.hpp"
#include "vcgpac/mechanism/exact.hpp"
#include "vcgpac/mechanism/feasibility.hpp"
#include "vcgpac/mechanism/vcg.hpp"

namespace vcgpac {

/// Guard on |T| * sum_n (K_n - 1) for exhaustive DSIC checks.
constexpr std::uint64_t kMaxDsicPairs = 10'000'000;

/// Exhaustive dominant-strategy check for an arbitrary payment rule
/// `pay(profile) -> vector<double>` combined with the efficient decision.
/// True iff no player gains more than 1e-9 by any unilateral misreport at
/// any profile.
template <ValueModel M, class PaymentRule>
bool check_dsic_with(const Environment<M>& env, PaymentRule&& pay, EvaluationCache& cache) {
  const ProfileSpace& space = env.space();
  double pairs = space.approx_size();
  double misreports = 0.0;
  for (std::size_t n = 0; n < env.n_players(); ++n) {
    misreports += static_cast<double>(env.n_types(n) - 1);
  }
  pairs *= misreports;
  if (pairs > static_cast<double>(kMaxDsicPairs)) {
    throw EnumerationLimitError("DSIC check needs " + std::to_string(pairs) +
                                " profile-misreport pairs, limit is " +
                                std::to_string(kMaxDsicPairs));
  }
  const std::uint64_t size = *space.size();
  std::vector<typename M::Decision> decisions;
  std::vector<std::vector<double>> payments;
  decisions.reserve(size);
  payments.reserve(size);
  for (std::uint64_t i = 0; i < size; ++i) {
    const TypeProfile t = space.profile_at(i);
    auto [d, w] = efficient_decision(env, t, cache);
    (void)w;
    decisions.push_back(std::move(d));
    payments.push_back(pay(t));
  }
  for (std::uint64_t i = 0; i < size; ++i) {
    const TypeProfile t = space.profile_at(i);
    const auto truth = env.values(t);
    for (std::size_t n = 0; n < env.n_players(); ++n) {
      const double honest = env.model().value(decisions[i], n, truth[n]) - payments[i][n];
      for (TypeIndex k = 0; k < env.n_types(n); ++k) {
        if (k == t[n]) continue;
        const std::uint64_t j = i + (static_cast<std::uint64_t>(k) - t[n]) * space.stride(n);
        const double lie = env.model().value(decisions[j], n, truth[n]) - payments[j][n];
        if (lie > honest + kExactTolerance) return false;
      }
    }
  }
  return true;
}

template <ValueModel M>
bool check_dsic(const Mechanism<M>& mech, EvaluationCache& cache) {
  return check_dsic_with(
      mech.env(), [&](const TypeProfile& t) { return payment(mech, t, cache); }, cache);
}

/// E[w* | t_n] - eta_n: the interim expected utility of a truthful player.
inline double expected_utility(const ExactMoments& m, const ConstantPivotRule& rule,
                               std::size_t n, TypeIndex k) {
  return m.conditional(n, k) - rule.eta[n];
}

/// sum_n eta_n - (N-1) E[w*].
inline double expected_revenue(const ExactMoments& m, const ConstantPivotRule& rule) {
  const double sum_eta = std::accumulate(rule.eta.begin(), rule.eta.end(), 0.0);
  return sum_eta - static_cast<double>(rule.eta.size() - 1) * m.mean_w;
}

template <ValueModel M>
double expected_utility_exact(const Mechanism<M>& mech, std::size_t n, TypeIndex k,
                              EvaluationCache& cache) {
  return expected_utility(exact_moments(mech.env(), cache), mech.pivot(), n, k);
}

template <ValueModel M>
double expected_revenue_exact(const Mechanism<M>& mech, EvaluationCache& cache) {
  return expected_revenue(exact_moments(mech.env(), cache), mech.pivot());
}

/// Interim utility under a general pivot rule `pivot(n, profile)` that may
/// depend on t_{-n}: E[w* | t_n] - E[h_n(t_{-n}) | t_n], by enumeration.
template <ValueModel M, class Pivot>
double expected_utility_general(const Environment<M>& env, Pivot&& pivot, std::size_t n,
                                TypeIndex k, EvaluationCache& cache) {
  CompensatedSum value;
  CompensatedSum mass;
  env.prior().for_each_profile([&](const TypeProfile& t, std::uint64_t linear, double p) {
    if (t[n] != k) return;
    value.add(p * (w_star(env, linear, t, cache) - pivot(n, t)));
    mass.add(p);
  });
  if (!(mass.value() > 0.0)) {
    throw ZeroProbabilityError("expected utility conditioned on a zero-probability type");
  }
  return value.value() / mass.value();
}

/// sum_n E[h_n(t_{-n})] - (N-1) E[w*] under a general pivot rule.
template <ValueModel M, class Pivot>
double expected_revenue_general(const Environment<M>& env, Pivot&& pivot,
                                EvaluationCache& cache) {
  CompensatedSum revenue;
  const auto others = static_cast<double>(env.n_players() - 1);
  env.prior().for_each_profile([&](const TypeProfile& t, std::uint64_t linear, double p) {
    double h = 0.0;
    for (std::size_t n = 0; n < env.n_players(); ++n) h += pivot(n, t);
    revenue.add(p * (h - others * w_star(env, linear, t, cache)));
  });
  return revenue.value();
}

}  // namespace vcgpac
