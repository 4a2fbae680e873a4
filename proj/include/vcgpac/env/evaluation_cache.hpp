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

#include <atomic>
#include <cmath>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "vcgpac/env/type_profile.hpp"

namespace vcgpac {

/// Memo table for w*(t) keyed by the canonical profile (its type indices).
///
/// Counts every request and every distinct profile whose value had to be
/// computed; the latter is the cost metric reported by the experiments.
/// Reads and writes may come from several threads; counter totals are only
/// deterministic under single-threaded use.
class EvaluationCache {
 public:
  enum class Storage {
    kHashed,    // hash map, grows with the number of distinct profiles
    kDense,     // flat array over the whole space (exact enumeration)
    kDisabled,  // recompute on every request
  };

  static constexpr std::uint64_t kMaxDenseProfiles = std::uint64_t{1} << 26;

  explicit EvaluationCache(const ProfileSpace& space, Storage storage = Storage::kHashed)
      : space_(space), storage_(storage) {
    if (storage_ == Storage::kDense) {
      if (!space_.indexable() || *space_.size() > kMaxDenseProfiles) {
        throw std::invalid_argument("profile space too large for a dense cache");
      }
      dense_ = std::vector<std::atomic<double>>(*space_.size());
      for (auto& slot : dense_) {
        slot.store(kEmpty, std::memory_order_relaxed);
      }
    }
  }

  EvaluationCache(const EvaluationCache&) = delete;
  EvaluationCache& operator=(const EvaluationCache&) = delete;

  /// Returns the cached value for `t`, computing it with `compute()` on a miss.
  template <class Compute>
  double get_or_compute(const TypeProfile& t, Compute&& compute) {
    if (space_.indexable()) {
      return get_or_compute(space_.linear_index(t), t, compute);
    }
    total_.fetch_add(1, std::memory_order_relaxed);
    if (storage_ == Storage::kDisabled) {
      unique_.fetch_add(1, std::memory_order_relaxed);
      return compute();
    }
    std::string key = wide_key(t);
    {
      std::shared_lock lock(mutex_);
      auto it = wide_.find(key);
      if (it != wide_.end()) return it->second;
    }
    const double w = compute();
    std::unique_lock lock(mutex_);
    auto [it, inserted] = wide_.emplace(std::move(key), w);
    if (inserted) unique_.fetch_add(1, std::memory_order_relaxed);
    return it->second;
  }

  /// Same as above when the caller already knows the linear index.
  template <class Compute>
  double get_or_compute(std::uint64_t linear, const TypeProfile& /*t*/,
                        Compute&& compute) {
    total_.fetch_add(1, std::memory_order_relaxed);
    switch (storage_) {
      case Storage::kDisabled:
        unique_.fetch_add(1, std::memory_order_relaxed);
        return compute();
      case Storage::kDense: {
        auto& slot = dense_[linear];
        double current = slot.load(std::memory_order_acquire);
        if (!is_empty(current)) return current;
        const double w = compute();
        double expected = kEmpty;
        if (slot.compare_exchange_strong(expected, w, std::memory_order_acq_rel)) {
          unique_.fetch_add(1, std::memory_order_relaxed);
          return w;
        }
        return expected;
      }
      case Storage::kHashed:
      default: {
        {
          std::shared_lock lock(mutex_);
          auto it = narrow_.find(linear);
          if (it != narrow_.end()) return it->second;
        }
        const double w = compute();
        std::unique_lock lock(mutex_);
        auto [it, inserted] = narrow_.emplace(linear, w);
        if (inserted) unique_.fetch_add(1, std::memory_order_relaxed);
        return it->second;
      }
    }
  }

  /// Looks up without computing or counting.
  std::optional<double> peek(const TypeProfile& t) const {
    if (storage_ == Storage::kDisabled) return std::nullopt;
    if (!space_.indexable()) {
      std::shared_lock lock(mutex_);
      auto it = wide_.find(wide_key(t));
      if (it == wide_.end()) return std::nullopt;
      return it->second;
    }
    const std::uint64_t linear = space_.linear_index(t);
    if (storage_ == Storage::kDense) {
      const double v = dense_[linear].load(std::memory_order_acquire);
      if (is_empty(v)) return std::nullopt;
      return v;
    }
    std::shared_lock lock(mutex_);
    auto it = narrow_.find(linear);
    if (it == narrow_.end()) return std::nullopt;
    return it->second;
  }

  /// Distinct profiles whose w* was computed (every request when disabled).
  std::uint64_t unique_evals() const { return unique_.load(std::memory_order_relaxed); }
  std::uint64_t total_requests() const { return total_.load(std::memory_order_relaxed); }

  Storage storage() const { return storage_; }
  const ProfileSpace& space() const { return space_; }

 private:
  static constexpr double kEmpty = std::numeric_limits<double>::quiet_NaN();
  static bool is_empty(double v) { return std::isnan(v); }

  std::string wide_key(const TypeProfile& t) const {
    const auto idx = t.indices();
    return std::string(reinterpret_cast<const char*>(idx.data()),
                       idx.size() * sizeof(TypeIndex));
  }

  ProfileSpace space_;
  Storage storage_;
  std::vector<std::atomic<double>> dense_;
  std::unordered_map<std::uint64_t, double> narrow_;
  std::unordered_map<std::string, double> wide_;
  mutable std::shared_mutex mutex_;
  std::atomic<std::uint64_t> unique_{0};
  std::atomic<std::uint64_t> total_{0};
};

}  // namespace vcgpac
