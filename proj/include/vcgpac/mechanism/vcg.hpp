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
#include <stdexcept>
#include <utility>
#include <vector>

#include "vcgpac/env/efficient.hpp"
#include "vcgpac/env/environment.hpp"
#include "vcgpac/mechanism/pivot_rules.hpp"

namespace vcgpac {

/// VCG mechanism (phi*, h) with a constant pivot rule.
template <ValueModel M>
class Mechanism {
 public:
  Mechanism(const Environment<M>& env, ConstantPivotRule pivot)
      : env_(&env), pivot_(std::move(pivot)) {
    if (pivot_.eta.size() != env.n_players()) {
      throw std::invalid_argument("pivot rule length does not match the player count");
    }
  }

  const Environment<M>& env() const { return *env_; }
  const ConstantPivotRule& pivot() const { return pivot_; }
  double eta(std::size_t n) const { return pivot_.eta[n]; }

 private:
  const Environment<M>* env_;
  ConstantPivotRule pivot_;
};

namespace detail {

// tau_n = eta_n - sum_{m != n} v(d; t_m), with the decision already known.
template <ValueModel M>
std::vector<double> vcg_payments(const M& model, const typename M::Decision& d,
                                 std::span<const TypeValue> declared,
                                 std::span<const double> eta) {
  std::vector<double> own(declared.size());
  double total = 0.0;
  for (std::size_t n = 0; n < declared.size(); ++n) {
    own[n] = model.value(d, n, declared[n]);
    total += own[n];
  }
  std::vector<double> tau(declared.size());
  for (std::size_t n = 0; n < declared.size(); ++n) {
    double others = 0.0;
    for (std::size_t m = 0; m < declared.size(); ++m) {
      if (m != n) others += own[m];
    }
    tau[n] = eta[n] - others;
  }
  return tau;
}

}  // namespace detail

/// Payments from each player to the mediator at declared profile t.
template <ValueModel M>
std::vector<double> payment(const Mechanism<M>& mech, const TypeProfile& t,
                            EvaluationCache& cache) {
  const auto& env = mech.env();
  auto [decision, w] = efficient_decision(env, t, cache);
  (void)w;
  return detail::vcg_payments(env.model(), decision, env.values(t), mech.pivot().eta);
}

template <ValueModel M>
struct ProtocolOutcome {
  typename M::Decision decision;
  std::vector<double> payments;
  std::vector<double> utilities;
};

/// One round of the protocol: decide on the declared profile, charge VCG
/// payments on it, and score utilities with the players' true types.
template <ValueModel M>
ProtocolOutcome<M> run_protocol(const Mechanism<M>& mech, const TypeProfile& declared,
                                const TypeProfile& true_types, EvaluationCache& cache) {
  const auto& env = mech.env();
  env.check(true_types);
  auto [decision, w] = efficient_decision(env, declared, cache);
  (void)w;
  ProtocolOutcome<M> out{std::move(decision), {}, {}};
  out.payments = detail::vcg_payments(env.model(), out.decision, env.values(declared),
                                      mech.pivot().eta);
  const auto truth = env.values(true_types);
  for (std::size_t n = 0; n < env.n_players(); ++n) {
    out.utilities.push_back(env.model().value(out.decision, n, truth[n]) - out.payments[n]);
  }
  return out;
}

}  // namespace vcgpac
