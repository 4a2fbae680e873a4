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

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vcgpac/learn/learn_mechanism.hpp"

namespace vcgpac {

/// Invalid configuration; maps to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

enum class ThetaMode { kZero, kFeasibility };
enum class RhoMode { kZero, kFeasibility, kExplicit };
enum class EpsUnits { kRaw, kScaled };
enum class OutputFormat { kCsv, kJson };

inline const char* to_string(ThetaMode m) {
  return m == ThetaMode::kZero ? "zero" : "feasibility";
}
inline const char* to_string(RhoMode m) {
  switch (m) {
    case RhoMode::kZero: return "zero";
    case RhoMode::kFeasibility: return "feasibility";
    case RhoMode::kExplicit: default: return "explicit";
  }
}
inline const char* to_string(EpsUnits u) { return u == EpsUnits::kRaw ? "raw" : "scaled"; }

struct EnvSpec {
  std::optional<std::string> path;  // JSON environment file
  std::size_t players = 8;
  std::size_t types = 8;
  std::uint64_t seed = 1;
};

struct ExperimentConfig {
  std::string command;
  EnvSpec env;

  double eps = 0.25;
  std::optional<double> eps_lambda;  // defaults to eps
  double delta = 0.1;
  EpsUnits eps_units = EpsUnits::kRaw;
  std::optional<double> rho_prime;
  ThetaMode theta_mode = ThetaMode::kZero;
  RhoMode rho_mode = RhoMode::kZero;
  double rho = 0.0;  // used when rho_mode is explicit

  std::size_t reps = 10;
  std::optional<std::string> out;
  OutputFormat format = OutputFormat::kCsv;
  std::size_t parallel = 1;

  // eval / rmse
  PlugInRule rule = PlugInRule::kSbb;
  std::vector<double> eps_list{1.0, 0.5, 0.4, 0.3, 0.25, 0.2, 0.15};
  // bandit-bench
  std::vector<std::size_t> arm_list{2, 4, 8, 16, 32};
  std::vector<double> delta_list{0.1};
  // scaling
  std::vector<std::size_t> n_list{2, 3, 4, 6, 8, 12, 16};
  std::vector<std::size_t> k_list{2, 4, 8, 16};
  bool sweep_n = true;
  bool sweep_k = true;
  // learn
  bool record_trace = true;
  std::size_t trace_stride = 1;
  bool check_exact = false;

  double eps_lambda_value() const { return eps_lambda.value_or(eps); }
};

namespace detail {

inline void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

inline void check_eps(double eps, EpsUnits units, const std::string& name) {
  require(std::isfinite(eps) && eps > 0.0, name + " must be positive");
  if (units == EpsUnits::kScaled) require(eps < 1.0, name + " in scaled units must be < 1");
}

inline void check_delta(double delta, const std::string& name) {
  require(delta > 0.0 && delta < 1.0, name + " must lie in (0, 1)");
}

}  // namespace detail

/// Checks every numeric field the command will use.
inline void validate(const ExperimentConfig& c) {
  using detail::require;
  if (!c.env.path) {
    require(c.env.players >= 1, "--players must be at least 1");
    require(c.env.types >= 1, "--types must be at least 1");
  }
  require(c.parallel >= 1, "--parallel must be at least 1");
  require(c.trace_stride >= 1, "--trace-stride must be at least 1");
  require(std::isfinite(c.rho), "--rho must be finite");
  if (c.rho_prime) require(std::isfinite(*c.rho_prime), "--rho-prime must be finite");

  const bool learns = c.command == "learn" || c.command == "eval" || c.command == "scaling";
  if (learns) {
    detail::check_eps(c.eps, c.eps_units, "--eps");
    detail::check_eps(c.eps_lambda_value(), c.eps_units, "--eps-lambda");
    detail::check_delta(c.delta, "--delta");
  }
  if (c.command == "learn" || c.command == "eval") {
    require(c.env.path || c.env.players >= 2, "learning needs at least two players");
  }
  if (c.command == "rmse") {
    require(!c.eps_list.empty(), "--eps-list must not be empty");
    for (double e : c.eps_list) detail::check_eps(e, c.eps_units, "--eps-list entry");
    detail::check_delta(c.delta, "--delta");
    require(c.env.path || c.env.players >= 2, "learning needs at least two players");
  }
  if (c.command == "rmse" || c.command == "bandit-bench") {
    require(c.reps >= 1, "--reps must be at least 1");
  }
  if (c.command == "bandit-bench") {
    require(!c.arm_list.empty(), "--arms must not be empty");
    for (std::size_t k : c.arm_list) require(k >= 1, "--arms entries must be at least 1");
    require(!c.eps_list.empty(), "--eps-list must not be empty");
    for (double e : c.eps_list) detail::check_eps(e, EpsUnits::kScaled, "--eps-list entry");
    require(!c.delta_list.empty(), "--delta-list must not be empty");
    for (double d : c.delta_list) detail::check_delta(d, "--delta-list entry");
  }
  if (c.command == "scaling") {
    require((c.sweep_n && !c.n_list.empty()) || (c.sweep_k && !c.k_list.empty()),
            "nothing to sweep");
    if (c.sweep_n) {
      for (std::size_t n : c.n_list) require(n >= 2, "--n-list entries must be at least 2");
    }
    if (c.sweep_k) {
      for (std::size_t k : c.k_list) require(k >= 1, "--k-list entries must be at least 1");
      require(c.env.players >= 2, "--players must be at least 2 for the K sweep");
    }
    require(c.theta_mode == ThetaMode::kZero && c.rho_mode != RhoMode::kFeasibility,
            "scaling runs beyond exact enumeration; use zero theta and a fixed rho");
  }
}

}  // namespace vcgpac
