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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vcgpac/core/errors.hpp"
#include "vcgpac/core/rng.hpp"
#include "vcgpac/env/type_profile.hpp"

namespace vcgpac {

enum class PriorKind { kIndependent, kJoint };

inline const char* to_string(PriorKind kind) {
  return kind == PriorKind::kIndependent ? "independent" : "joint";
}

namespace detail {

constexpr double kWeightSumTolerance = 1e-12;

inline std::vector<double> cumulative(const std::vector<double>& weights) {
  std::vector<double> cum(weights.size());
  std::partial_sum(weights.begin(), weights.end(), cum.begin());
  return cum;
}

// Index of the categorical draw; never returns a zero-weight entry.
inline std::size_t draw(const std::vector<double>& cum, Rng& rng) {
  const double u = rng.uniform01() * cum.back();
  auto it = std::upper_bound(cum.begin(), cum.end(), u);
  if (it == cum.end()) {
    // u rounded up to the total; take the last entry with positive weight.
    std::size_t i = cum.size() - 1;
    while (i > 0 && cum[i] == cum[i - 1]) --i;
    return i;
  }
  return static_cast<std::size_t>(it - cum.begin());
}

inline void check_weights(const std::vector<double>& w, const std::string& what) {
  if (w.empty()) throw std::invalid_argument(what + ": no weights");
  double total = 0.0;
  for (double x : w) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
      throw std::invalid_argument(what + ": weights must be finite and >= 0");
    }
    total += x;
  }
  if (std::fabs(total - 1.0) > kWeightSumTolerance) {
    throw std::invalid_argument(what + ": weights sum to " +
                                std::to_string(total) + ", expected 1");
  }
}

}  // namespace detail

/// Common prior over type profiles: either a product of per-player
/// categorical distributions or an explicit joint table over the (small)
/// profile space. Immutable after construction.
class Prior {
 public:
  /// Largest profile space a joint table may cover.
  static constexpr std::uint64_t kMaxJointProfiles = std::uint64_t{1} << 24;

  static Prior independent(std::vector<std::vector<double>> weights) {
    Prior p;
    p.kind_ = PriorKind::kIndependent;
    std::vector<std::size_t> radices;
    for (std::size_t n = 0; n < weights.size(); ++n) {
      detail::check_weights(weights[n], "player " + std::to_string(n));
      radices.push_back(weights[n].size());
    }
    p.space_ = ProfileSpace(std::move(radices));
    p.cumulative_.reserve(weights.size());
    for (const auto& w : weights) p.cumulative_.push_back(detail::cumulative(w));
    p.weights_ = std::move(weights);
    return p;
  }

  static Prior uniform(std::span<const std::size_t> radices) {
    std::vector<std::vector<double>> w;
    for (std::size_t r : radices) {
      w.emplace_back(r, 1.0 / static_cast<double>(r));
    }
    return independent(std::move(w));
  }

  /// `table[i]` is the probability of the profile with linear index i.
  static Prior joint(std::vector<std::size_t> radices, std::vector<double> table) {
    Prior p;
    p.kind_ = PriorKind::kJoint;
    p.space_ = ProfileSpace(std::move(radices));
    if (!p.space_.indexable() || *p.space_.size() > kMaxJointProfiles) {
      throw std::invalid_argument("joint prior table is limited to " +
                                  std::to_string(kMaxJointProfiles) +
                                  " profiles");
    }
    if (table.size() != *p.space_.size()) {
      throw std::invalid_argument("joint prior table has " +
                                  std::to_string(table.size()) +
                                  " entries, expected " +
                                  std::to_string(*p.space_.size()));
    }
    detail::check_weights(table, "joint prior");
    p.table_ = std::move(table);
    p.build_joint_index();
    return p;
  }

  PriorKind kind() const { return kind_; }
  const ProfileSpace& space() const { return space_; }
  std::size_t n_players() const { return space_.n_players(); }

  double probability(const TypeProfile& t) const {
    if (kind_ == PriorKind::kJoint) return table_[space_.linear_index(t)];
    double p = 1.0;
    for (std::size_t n = 0; n < weights_.size(); ++n) p *= weights_[n][t[n]];
    return p;
  }

  double marginal(std::size_t n, TypeIndex k) const {
    if (kind_ == PriorKind::kIndependent) return weights_.at(n).at(k);
    return marginals_.at(n).at(k);
  }

  /// Per-player weights; only meaningful for independent priors.
  const std::vector<double>& weights(std::size_t n) const { return weights_.at(n); }

  TypeProfile sample(Rng& rng) const {
    if (kind_ == PriorKind::kJoint) {
      return space_.profile_at(support_[detail::draw(support_cum_, rng)]);
    }
    std::vector<TypeIndex> idx(weights_.size());
    for (std::size_t n = 0; n < weights_.size(); ++n) {
      idx[n] = static_cast<TypeIndex>(detail::draw(cumulative_[n], rng));
    }
    return TypeProfile(std::move(idx));
  }

  /// Draw from P[. | t_n = k]. For independent priors the other players
  /// are drawn from their marginals; the result always has component n = k.
  TypeProfile sample_conditional(std::size_t n, TypeIndex k, Rng& rng) const {
    if (n >= n_players() || k >= space_.radix(n)) {
      throw std::out_of_range("conditioning type out of range");
    }
    if (kind_ == PriorKind::kJoint) {
      const auto& bucket = conditional_[n][k];
      if (bucket.profiles.empty()) {
        throw ZeroProbabilityError("P[t_" + std::to_string(n) + " = #" +
                                   std::to_string(k) + "] is zero");
      }
      return space_.profile_at(bucket.profiles[detail::draw(bucket.cum, rng)]);
    }
    std::vector<TypeIndex> idx(weights_.size());
    for (std::size_t m = 0; m < weights_.size(); ++m) {
      idx[m] = m == n ? k : static_cast<TypeIndex>(detail::draw(cumulative_[m], rng));
    }
    return TypeProfile(std::move(idx));
  }

  /// Calls f(profile, linear_index, probability) for every profile with
  /// positive probability, in increasing linear-index order.
  template <class F>
  void for_each_profile(F&& f) const {
    if (!space_.indexable()) {
      throw std::length_error("profile space too large to enumerate");
    }
    if (kind_ == PriorKind::kJoint) {
      for (std::uint64_t i : support_) f(space_.profile_at(i), i, table_[i]);
      return;
    }
    TypeProfile t = space_.first();
    std::uint64_t i = 0;
    do {
      const double p = probability(t);
      if (p > 0.0) f(static_cast<const TypeProfile&>(t), i, p);
      ++i;
    } while (space_.next(t));
  }

 private:
  struct Bucket {
    std::vector<std::uint64_t> profiles;
    std::vector<double> cum;
  };

  void build_joint_index() {
    const std::size_t n_players = space_.n_players();
    marginals_.assign(n_players, {});
    conditional_.assign(n_players, {});
    for (std::size_t n = 0; n < n_players; ++n) {
      marginals_[n].assign(space_.radix(n), 0.0);
      conditional_[n].assign(space_.radix(n), {});
    }
    std::vector<double> support_w;
    for (std::uint64_t i = 0; i < table_.size(); ++i) {
      const double p = table_[i];
      if (p <= 0.0) continue;
      support_.push_back(i);
      support_w.push_back(p);
      const TypeProfile t = space_.profile_at(i);
      for (std::size_t n = 0; n < n_players; ++n) {
        marginals_[n][t[n]] += p;
        Bucket& b = conditional_[n][t[n]];
        b.profiles.push_back(i);
        b.cum.push_back(p);
      }
    }
    support_cum_ = detail::cumulative(support_w);
    for (auto& per_player : conditional_) {
      for (Bucket& b : per_player) {
        std::partial_sum(b.cum.begin(), b.cum.end(), b.cum.begin());
      }
    }
  }

  PriorKind kind_ = PriorKind::kIndependent;
  ProfileSpace space_;
  // independent
  std::vector<std::vector<double>> weights_;
  std::vector<std::vector<double>> cumulative_;
  // joint
  std::vector<double> table_;
  std::vector<std::uint64_t> support_;
  std::vector<double> support_cum_;
  std::vector<std::vector<double>> marginals_;
  std::vector<std::vector<Bucket>> conditional_;
};

inline TypeProfile sample_profile(const Prior& prior, Rng& rng) {
  return prior.sample(rng);
}

inline TypeProfile sample_conditional(const Prior& prior, std::size_t n,
                                      TypeIndex k, Rng& rng) {
  return prior.sample_conditional(n, k, rng);
}

}  // namespace vcgpac
