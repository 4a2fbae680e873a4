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
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace vcgpac {

using TypeValue = std::int64_t;
using TypeIndex = std::uint32_t;

/// One type per player, stored as indices into each player's type set.
/// The index tuple is the canonical identity of a profile.
class TypeProfile {
 public:
  TypeProfile() = default;
  explicit TypeProfile(std::vector<TypeIndex> indices)
      : indices_(std::move(indices)) {}

  std::size_t size() const { return indices_.size(); }
  TypeIndex operator[](std::size_t n) const { return indices_[n]; }
  TypeIndex& operator[](std::size_t n) { return indices_[n]; }
  std::span<const TypeIndex> indices() const { return indices_; }

  friend bool operator==(const TypeProfile&, const TypeProfile&) = default;

 private:
  std::vector<TypeIndex> indices_;
};

/// The product space T_1 x ... x T_N, described by its per-player sizes.
///
/// Profiles map to a mixed-radix linear index (player 0 is the least
/// significant digit) whenever the space has fewer than 2^64 elements.
class ProfileSpace {
 public:
  ProfileSpace() = default;
  explicit ProfileSpace(std::vector<std::size_t> radices)
      : radices_(std::move(radices)), strides_(radices_.size(), 0) {
    if (radices_.empty()) {
      throw std::invalid_argument("profile space needs at least one player");
    }
    std::uint64_t stride = 1;
    bool overflow = false;
    approx_size_ = 1.0;
    for (std::size_t n = 0; n < radices_.size(); ++n) {
      if (radices_[n] == 0) {
        throw std::invalid_argument("player " + std::to_string(n) +
                                    " has an empty type set");
      }
      approx_size_ *= static_cast<double>(radices_[n]);
      strides_[n] = overflow ? 0 : stride;
      const std::uint64_t r = radices_[n];
      if (!overflow &&
          stride > std::numeric_limits<std::uint64_t>::max() / r) {
        overflow = true;
      } else if (!overflow) {
        stride *= r;
      }
    }
    if (!overflow) size_ = stride;
  }

  std::size_t n_players() const { return radices_.size(); }
  std::size_t radix(std::size_t n) const { return radices_[n]; }
  std::span<const std::size_t> radices() const { return radices_; }

  /// Number of profiles, or nullopt if it does not fit in 64 bits.
  std::optional<std::uint64_t> size() const { return size_; }
  double approx_size() const { return approx_size_; }
  bool indexable() const { return size_.has_value(); }

  bool contains(const TypeProfile& t) const {
    if (t.size() != radices_.size()) return false;
    for (std::size_t n = 0; n < radices_.size(); ++n) {
      if (t[n] >= radices_[n]) return false;
    }
    return true;
  }

  std::uint64_t linear_index(const TypeProfile& t) const {
    std::uint64_t index = 0;
    for (std::size_t n = 0; n < radices_.size(); ++n) {
      index += strides_[n] * t[n];
    }
    return index;
  }

  TypeProfile profile_at(std::uint64_t index) const {
    std::vector<TypeIndex> idx(radices_.size());
    for (std::size_t n = 0; n < radices_.size(); ++n) {
      idx[n] = static_cast<TypeIndex>(index % radices_[n]);
      index /= radices_[n];
    }
    return TypeProfile(std::move(idx));
  }

  std::uint64_t stride(std::size_t n) const { return strides_[n]; }

  /// Advances `t` to the next profile in linear order; false after the last.
  bool next(TypeProfile& t) const {
    for (std::size_t n = 0; n < radices_.size(); ++n) {
      if (++t[n] < radices_[n]) return true;
      t[n] = 0;
    }
    return false;
  }

  TypeProfile first() const {
    return TypeProfile(std::vector<TypeIndex>(radices_.size(), 0));
  }

  friend bool operator==(const ProfileSpace& a, const ProfileSpace& b) {
    return a.radices_ == b.radices_;
  }

 private:
  std::vector<std::size_t> radices_;
  std::vector<std::uint64_t> strides_;
  std::optional<std::uint64_t> size_;
  double approx_size_ = 0.0;
};

}  // namespace vcgpac
