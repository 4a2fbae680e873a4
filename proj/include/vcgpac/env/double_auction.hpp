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
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "vcgpac/env/type_profile.hpp"

namespace vcgpac {

/// A matched (buyer, seller) pair; indices are player indices.
struct Match {
  std::size_t buyer;
  std::size_t seller;
  friend bool operator==(const Match&, const Match&) = default;
};

/// Single-unit double-sided auction.
///
/// A positive type is a buyer with that valuation, a negative type a seller
/// with cost |t|, and a zero type does not participate. A decision is a
/// bipartite matching. A player trading in the role its type calls for gets
/// v(d; t_n) = t_n; trading in the other role (or with type zero) is worth
/// -value_bound; not trading is worth 0. The penalty keeps the decision set
/// independent of the reported types, so role-consistent matchings remain
/// the efficient ones.
class DoubleAuction {
 public:
  struct Decision {
    std::vector<Match> pairs;

    enum class Role { kNone, kBuyer, kSeller };

    Role role(std::size_t n) const {
      for (const Match& m : pairs) {
        if (m.buyer == n) return Role::kBuyer;
        if (m.seller == n) return Role::kSeller;
      }
      return Role::kNone;
    }
    bool involves(std::size_t n) const { return role(n) != Role::kNone; }
    friend bool operator==(const Decision&, const Decision&) = default;
  };

  explicit DoubleAuction(double value_bound) : value_bound_(value_bound) {
    if (!(value_bound >= 0.0)) {
      throw std::invalid_argument("value bound must be nonnegative");
    }
  }

  Decision efficient_decision(std::span<const TypeValue> types) const;

  double value(const Decision& d, std::size_t n, TypeValue t) const {
    switch (d.role(n)) {
      case Decision::Role::kBuyer: return t > 0 ? static_cast<double>(t) : -value_bound_;
      case Decision::Role::kSeller: return t < 0 ? static_cast<double>(t) : -value_bound_;
      case Decision::Role::kNone: default: return 0.0;
    }
  }

  /// Total value of the greedy matching, computed without building it.
  double max_welfare(std::span<const TypeValue> types) const {
    thread_local std::vector<TypeValue> buyers;
    thread_local std::vector<TypeValue> costs;
    buyers.clear();
    costs.clear();
    for (TypeValue t : types) {
      if (t > 0) buyers.push_back(t);
      if (t < 0) costs.push_back(-t);
    }
    std::sort(buyers.begin(), buyers.end(), std::greater<>());
    std::sort(costs.begin(), costs.end());
    TypeValue total = 0;
    const std::size_t m = std::min(buyers.size(), costs.size());
    for (std::size_t i = 0; i < m && buyers[i] > costs[i]; ++i) {
      total += buyers[i] - costs[i];
    }
    return static_cast<double>(total);
  }

  double value_bound() const { return value_bound_; }

 private:
  double value_bound_;
};

/// Greedy efficient matching: buyers by value descending, sellers by cost
/// ascending (ties by player index), paired while value exceeds cost.
inline DoubleAuction::Decision greedy_double_auction_decision(
    std::span<const TypeValue> types) {
  std::vector<std::size_t> buyers;
  std::vector<std::size_t> sellers;
  for (std::size_t n = 0; n < types.size(); ++n) {
    if (types[n] > 0) buyers.push_back(n);
    if (types[n] < 0) sellers.push_back(n);
  }
  std::stable_sort(buyers.begin(), buyers.end(), [&](std::size_t a, std::size_t b) {
    return types[a] > types[b];
  });
  std::stable_sort(sellers.begin(), sellers.end(), [&](std::size_t a, std::size_t b) {
    return -types[a] < -types[b];
  });
  DoubleAuction::Decision d;
  const std::size_t m = std::min(buyers.size(), sellers.size());
  for (std::size_t i = 0; i < m && types[buyers[i]] > -types[sellers[i]]; ++i) {
    d.pairs.push_back({buyers[i], sellers[i]});
  }
  return d;
}

inline DoubleAuction::Decision DoubleAuction::efficient_decision(
    std::span<const TypeValue> types) const {
  return greedy_double_auction_decision(types);
}

}  // namespace vcgpac
