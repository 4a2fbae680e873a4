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
// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <fmt/core.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "vcgpac/bandit/arms.hpp"
#include "vcgpac/bandit/best_mean.hpp"
#include "vcgpac/bandit/successive_elimination.hpp"
#include "vcgpac/env/generate.hpp"
#include "vcgpac/env/io.hpp"
#include "vcgpac/experiments/commands.hpp"
#include "vcgpac/learn/learn_mechanism.hpp"
#include "vcgpac/mechanism/exact.hpp"
#include "vcgpac/mechanism/feasibility.hpp"
#include "vcgpac/mechanism/pivot_rules.hpp"
#include "vcgpac/mechanism/properties.hpp"

namespace vcgpac::acceptance {
namespace {

// Pinned tolerances.
constexpr double kIdentityTol = 1e-9;
constexpr double kDeltaPrimeTol = 1e-6;
constexpr double kShiftTol = 1e-9;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<Outcome()> run;
};

DesignParams random_params(const ProfileSpace& space, Rng& rng) {
  ThetaTable theta = zero_theta(space.radices());
  for (auto& row : theta) {
    for (double& x : row) x = 4.0 * rng.uniform01() - 2.0;
  }
  return DesignParams(std::move(theta), 4.0 * rng.uniform01() - 2.0);
}

Outcome analytical_exactness() {
  const std::size_t sizes[] = {2, 3, 8};
  Rng rng(20240101);
  double worst_revenue = 0.0;
  double worst_ir = 0.0;  // most negative utility - theta
  double worst_general = 0.0;
  for (std::size_t i = 0; i < 20; ++i) {
    const std::size_t n = sizes[i % 3];
    const std::size_t k = sizes[(i / 3) % 3];
    const auto env = generate_double_auction(n, k, 1000 + i);
    EvaluationCache cache(env.space(), EvaluationCache::Storage::kDense);
    const ExactMoments m = exact_moments(env, cache);
    const DesignParams params = random_params(env.space(), rng);
    const auto report =
        feasibility_condition(kappa_vector(m, params), m.mean_w, params.rho(), n);
    const auto sbb = pivot_rule_sbb(report, uniform_allocation(report));
    const auto ir = pivot_rule_ir(report);
    worst_revenue = std::max(worst_revenue, std::fabs(expected_revenue(m, sbb) - params.rho()));
    // profile-level enumeration of the same revenue
    auto constant = [&](std::size_t p, const TypeProfile&) { return sbb.eta[p]; };
    worst_general = std::max(
        worst_general, std::fabs(expected_revenue_general(env, constant, cache) - params.rho()));
    for (std::size_t p = 0; p < n; ++p) {
      for (TypeIndex t = 0; t < k; ++t) {
        if (!m.positive(p, t)) continue;
        worst_ir = std::min(worst_ir, expected_utility(m, ir, p, t) - params.theta(p, t));
      }
    }
  }
  const bool pass = worst_revenue <= kIdentityTol && worst_general <= kIdentityTol &&
                    worst_ir >= -kIdentityTol;
  return {pass, fmt::format("max |rev-rho| {:.2e} (profile-level {:.2e}), min u-theta {:.2e}",
                            worst_revenue, worst_general, worst_ir)};
}

Outcome dsic_exhaustive() {
  Rng rng(77);
  int mechanisms = 0;
  int failures = 0;
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = 2 + rng.uniform_index(3);
    const std::size_t k = 1 + rng.uniform_index(4);
    const auto env = generate_double_auction(n, k, rng());
    EvaluationCache cache(env.space(), EvaluationCache::Storage::kDense);
    const ExactMoments m = exact_moments(env, cache);
    const DesignParams params = random_params(env.space(), rng);
    const auto report =
        feasibility_condition(kappa_vector(m, params), m.mean_w, params.rho(), n);
    std::vector<ConstantPivotRule> rules{pivot_rule_sbb(report, uniform_allocation(report)),
                                         pivot_rule_ir(report)};
    const auto learned = learn_mechanism(env, params.with_rho(rho_for_feasibility(m) - 5.0),
                                         1.0, 1.0, 0.1, rng(), cache);
    const auto& tr = learned.trace;
    rules.push_back(learned.mechanism ? learned.mechanism->pivot()
                                      : plug_in_rule(tr.kappa_hat, tr.mean_w_hat, tr.rho_used,
                                                     PlugInRule::kSbb));
    for (const auto& rule : rules) {
      ++mechanisms;
      if (!check_dsic(Mechanism(env, rule), cache)) ++failures;
    }
  }
  return {failures == 0, fmt::format("{} mechanisms, {} violations", mechanisms, failures)};
}

Outcome dependent_counterexample() {
  // profiles (2, -1) and (6, -2) with probability 1/2 each: x_1 = 1, x_2 = 4
  const auto env = load_double_auction(VCGPAC_DATA_DIR "/dependent_example.json");
  EvaluationCache cache(env.space());
  auto pivot = [&](std::size_t, const TypeProfile& t) {
    return 2.0 / 3.0 * w_star(env, t, cache);
  };
  double min_gap = INFINITY;
  for (std::size_t n = 0; n < 2; ++n) {
    for (TypeIndex k = 0; k < 2; ++k) {
      min_gap = std::min(min_gap, expected_utility_general(env, pivot, n, k, cache));
    }
  }
  const double revenue = expected_revenue_general(env, pivot, cache);
  const ExactMoments m = exact_moments(env, cache);
  const auto report =
      feasibility_condition(kappa_vector(m, DesignParams::zero(env.space())), m.mean_w, 0.0, 2);
  const bool pass = min_gap >= 0.0 && revenue >= 0.0 && report.slack == -0.5;
  return {pass, fmt::format("min interim utility {:.4f}, revenue {:.4f}, slack {}", min_gap,
                            revenue, report.slack)};
}

Outcome se_bme_coverage() {
  const auto means = bernoulli_ladder(10);
  int hits = 0;
  for (std::uint64_t r = 0; r < 200; ++r) {
    BernoulliArms arms(means);
    Rng rng = Rng::substream(4, r);
    if (std::fabs(se_bme(arms, 0.1, 0.1, rng).estimate - 0.95) <= 0.1) ++hits;
  }
  return {hits >= 180, fmt::format("{}/200 within 0.1", hits)};
}

Outcome bme_vs_bai() {
  const auto k2 = bandit_bench_point(2, 0.1, 0.1, 10, 5);
  const auto k16 = bandit_bench_point(16, 0.1, 0.1, 10, 5);
  const auto k32 = bandit_bench_point(32, 0.1, 0.1, 10, 5);
  const bool pass = k16.bme.median <= k16.bai.median && k32.bme.median <= k32.bai.median &&
                    k2.bai.median <= k2.bme.median;
  return {pass, fmt::format("median pulls BME/BAI: K=2 {}/{}, K=16 {}/{}, K=32 {}/{}",
                            k2.bme.median, k2.bai.median, k16.bme.median, k16.bai.median,
                            k32.bme.median, k32.bai.median)};
}

Outcome evaluation_reduction() {
  ExperimentConfig c;
  c.command = "scaling";
  c.eps = 0.25;
  c.delta = 0.1;
  c.eps_units = EpsUnits::kScaled;
  const auto n8 = scaling_point(c, 8, 8, 1);
  const auto n16 = scaling_point(c, 16, 8, 1);
  const double baseline = std::pow(8.0, 8.0);
  const double fraction = static_cast<double>(n8.unique_evals) / baseline;
  const double ratio =
      static_cast<double>(n16.unique_evals) / static_cast<double>(n8.unique_evals);
  return {fraction < 0.01 && ratio < 4.0,
          fmt::format("unique N=8 {} ({:.4f}% of 8^8), N=16 {}, ratio {:.3f}", n8.unique_evals,
                      100.0 * fraction, n16.unique_evals, ratio)};
}

Outcome end_to_end_coverage() {
  int nonempty = 0;
  int good = 0;
  for (std::uint64_t r = 0; r < 100; ++r) {
    const auto env = generate_double_auction(3, 3, 7000 + r);
    EvaluationCache cache(env.space(), EvaluationCache::Storage::kDense);
    const ExactMoments m = exact_moments(env, cache);
    // slack of at least 2 leaves room for the certification margins
    const auto params = DesignParams::zero(env.space(), rho_for_feasibility(m) - 2.0);
    const auto out = learn_mechanism(env, params, 0.3, 0.3, 0.2, r, cache);
    if (!out.mechanism) continue;
    ++nonempty;
    const auto& rule = out.mechanism->pivot();
    bool ok = expected_revenue(m, rule) >= params.rho();
    for (std::size_t n = 0; n < 3; ++n) {
      for (TypeIndex k = 0; k < 3; ++k) {
        if (m.positive(n, k)) ok = ok && expected_utility(m, rule, n, k) >= params.theta(n, k);
      }
    }
    if (ok) ++good;
  }
  const double frac = nonempty > 0 ? static_cast<double>(good) / nonempty : 0.0;
  return {nonempty > 0 && frac >= 0.8,
          fmt::format("{}/{} nonempty runs satisfy IR and WBB ({:.3f})", good, nonempty, frac)};
}

Outcome formula_spot_checks() {
  const auto a = m_star(0.1, 0.05);
  const auto b = m_star(0.5, 0.1);
  const double d = per_estimate_delta(0.1, 8);
  return {a == 639 && b == 21 && std::fabs(d - 0.011639) <= kDeltaPrimeTol,
          fmt::format("m*(0.1,0.05)={}, m*(0.5,0.1)={}, delta'(8,0.1)={:.7f}", a, b, d)};
}

Outcome rho_prime_shift() {
  ExperimentConfig c;
  c.command = "eval";
  c.env.players = 8;
  c.env.types = 4;
  c.env.seed = 3;
  c.eps = 0.5;
  c.delta = 0.1;
  c.rho = 0.0;
  c.rho_mode = RhoMode::kExplicit;
  const auto env = make_env(c.env);
  const auto base = evaluate_replication(c, env, c.eps, c.eps, c.env.seed);
  c.rho_prime = 0.1;
  const auto raised = evaluate_replication(c, env, c.eps, c.eps, c.env.seed);
  const double shift = raised.learned_revenue - base.learned_revenue;
  double worst = std::fabs(shift - 0.1);
  for (std::size_t i = 0; i < base.utilities.size(); ++i) {
    const double du = raised.utilities[i].learned - base.utilities[i].learned;
    worst = std::max(worst, std::fabs(du + 0.1 / 8.0));
  }
  return {worst <= kShiftTol,
          fmt::format("revenue shift {:.12f}, max deviation {:.2e}", shift, worst)};
}

}  // namespace
}  // namespace vcgpac::acceptance

int main() {
  using namespace vcgpac::acceptance;
  const std::vector<Criterion> criteria{
      {1, "analytical-solution exactness", 120, analytical_exactness},
      {2, "DSIC exhaustive", 30, dsic_exhaustive},
      {3, "dependent-type counterexample", 1, dependent_counterexample},
      {4, "SE-BME PAC coverage", 120, se_bme_coverage},
      {5, "BME vs BAI sample-size trend", 300, bme_vs_bai},
      {6, "evaluation-count reduction", 600, evaluation_reduction},
      {7, "end-to-end PAC coverage", 300, end_to_end_coverage},
      {8, "m* and delta' spot checks", 1, formula_spot_checks},
      {9, "rho' remedy shift", 120, rho_prime_shift},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.budget_seconds;
    const bool pass = o.pass && in_time;
    if (!pass) ++failed;
    fmt::print("{} criterion {}: {} | {} | {:.2f}s (budget {}s{})\n", pass ? "PASS" : "FAIL",
               c.id, c.name, o.detail, secs, c.budget_seconds, in_time ? "" : ", exceeded");
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
