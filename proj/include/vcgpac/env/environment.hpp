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
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vcgpac/env/prior.hpp"
#include "vcgpac/env/type_profile.hpp"
#include "vcgpac/env/value_model.hpp"

namespace vcgpac {

/// Players, their finite type sets, the common prior and the value model.
/// Immutable after construction and safe to share across threads.
template <ValueModel Model>
class Environment {
 public:
  using Decision = typename Model::Decision;

  Environment(std::vector<std::vector<TypeValue>> type_sets, Prior prior,
              Model model, std::optional<std::uint64_t> seed = std::nullopt)
      : type_sets_(std::move(type_sets)),
        prior_(std::move(prior)),
        model_(std::move(model)),
        seed_(seed) {
    if (type_sets_.empty()) {
      throw std::invalid_argument("environment needs at least one player");
    }
    std::vector<std::size_t> radices;
    for (std::size_t n = 0; n < type_sets_.size(); ++n) {
      auto sorted = type_sets_[n];
      std::sort(sorted.begin(), sorted.end());
      if (sorted.empty()) {
        throw std::invalid_argument("player " + std::to_string(n) +
                                    " has an empty type set");
      }
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("player " + std::to_string(n) +
                                    " has duplicate types");
      }
      radices.push_back(type_sets_[n].size());
    }
    space_ = ProfileSpace(std::move(radices));
    if (!(prior_.space() == space_)) {
      throw std::invalid_argument("prior does not match the type sets");
    }
  }

  std::size_t n_players() const { return type_sets_.size(); }
  std::size_t n_types(std::size_t n) const { return type_sets_.at(n).size(); }
  std::span<const TypeValue> types(std::size_t n) const { return type_sets_.at(n); }
  const std::vector<std::vector<TypeValue>>& type_sets() const { return type_sets_; }
  TypeValue type_value(std::size_t n, TypeIndex k) const { return type_sets_[n][k]; }

  std::optional<TypeIndex> type_index(std::size_t n, TypeValue value) const {
    const auto& ts = type_sets_.at(n);
    auto it = std::find(ts.begin(), ts.end(), value);
    if (it == ts.end()) return std::nullopt;
    return static_cast<TypeIndex>(it - ts.begin());
  }

  const Prior& prior() const { return prior_; }
  const Model& model() const { return model_; }
  const ProfileSpace& space() const { return space_; }
  double value_bound() const { return model_.value_bound(); }
  std::optional<std::uint64_t> seed() const { return seed_; }

  void materialize(const TypeProfile& t, std::span<TypeValue> out) const {
    for (std::size_t n = 0; n < type_sets_.size(); ++n) out[n] = type_sets_[n][t[n]];
  }

  std::vector<TypeValue> values(const TypeProfile& t) const {
    check(t);
    std::vector<TypeValue> out(type_sets_.size());
    materialize(t, out);
    return out;
  }

  TypeProfile profile_from_values(std::span<const TypeValue> values) const {
    if (values.size() != n_players()) {
      throw std::invalid_argument("profile has wrong number of players");
    }
    std::vector<TypeIndex> idx(values.size());
    for (std::size_t n = 0; n < values.size(); ++n) {
      auto k = type_index(n, values[n]);
      if (!k) {
        throw std::invalid_argument("type " + std::to_string(values[n]) +
                                    " is not in player " + std::to_string(n) +
                                    "'s type set");
      }
      idx[n] = *k;
    }
    return TypeProfile(std::move(idx));
  }

  void check(const TypeProfile& t) const {
    if (!space_.contains(t)) throw std::out_of_range("invalid type profile");
  }

 private:
  std::vector<std::vector<TypeValue>> type_sets_;
  Prior prior_;
  Model model_;
  ProfileSpace space_;
  std::optional<std::uint64_t> seed_;
};

}  // namespace vcgpac
