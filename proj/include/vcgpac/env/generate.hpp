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
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "vcgpac/core/rng.hpp"
#include "vcgpac/env/double_auction.hpp"
#include "vcgpac/env/environment.hpp"
#include "vcgpac/env/prior.hpp"

namespace vcgpac {

using DoubleAuctionEnv = Environment<DoubleAuction>;

/// Random double auction: each player gets K distinct integer types drawn
/// uniformly from [-K, K], sorted ascending, with a uniform independent prior.
inline DoubleAuctionEnv generate_double_auction(std::size_t n_players,
                                                std::size_t n_types,
                                                std::uint64_t seed) {
  if (n_players == 0) throw std::invalid_argument("n_players must be positive");
  if (n_types == 0) throw std::invalid_argument("n_types must be positive");
  const auto k = static_cast<TypeValue>(n_types);
  Rng rng(seed);
  std::vector<std::vector<TypeValue>> type_sets(n_players);
  std::vector<TypeValue> pool(2 * n_types + 1);
  for (auto& types : type_sets) {
    std::iota(pool.begin(), pool.end(), -k);
    // partial Fisher-Yates: the first n_types slots become the sample
    for (std::size_t i = 0; i < n_types; ++i) {
      const std::size_t j = i + rng.uniform_index(pool.size() - i);
      std::swap(pool[i], pool[j]);
    }
    types.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(n_types));
    std::sort(types.begin(), types.end());
  }
  std::vector<std::size_t> radices(n_players, n_types);
  return DoubleAuctionEnv(std::move(type_sets), Prior::uniform(radices),
                          DoubleAuction(static_cast<double>(n_types)), seed);
}

}  // namespace vcgpac
