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
#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "vcgpac/bandit/arms.hpp"
#include "vcgpac/bandit/successive_elimination.hpp"
#include "vcgpac/core/parallel.hpp"
#include "vcgpac/env/generate.hpp"
#include "vcgpac/env/io.hpp"
#include "vcgpac/experiments/config.hpp"
#include "vcgpac/experiments/table.hpp"
#include "vcgpac/learn/io.hpp"
#include "vcgpac/learn/learn_mechanism.hpp"
#include "vcgpac/mechanism/exact.hpp"
#include "vcgpac/mechanism/feasibility.hpp"
#include "vcgpac/mechanism/io.hpp"
#include "vcgpac/mechanism/pivot_rules.hpp"
#include "vcgpac/mechanism/properties.hpp"

namespace vcgpac {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;

namespace detail {

template <class Fn>
void write_to(const std::optional<std::string>& path, std::ostream& fallback, Fn&& fn) {
  if (!path) {
    fn(fallback);
    return;
  }
  std::ofstream f(*path, std::ios::binary);
  if (!f) throw UsageError("cannot open '" + *path + "' for writing");
  fn(f);
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open '" + path.string() + "' for writing");
  f << content;
}

inline std::filesystem::path make_out_dir(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw UsageError("cannot create directory '" + dir + "': " + ec.message());
  return dir;
}

inline const char* table_ext(OutputFormat f) { return f == OutputFormat::kJson ? ".json" : ".csv"; }

inline std::string table_text(const Table& t, OutputFormat f) {
  std::ostringstream s;
  write_table(s, t, f);
  return s.str();
}

inline void require_enumerable(const ProfileSpace& space, const std::string& why) {
  if (!space.indexable() || *space.size() > EvaluationCache::kMaxDenseProfiles) {
    throw UsageError(why + " needs exact enumeration, but the environment has " +
                     fmt::format("{:g}", space.approx_size()) + " type profiles");
  }
}

inline double sample_stddev(const std::vector<double>& xs, double mean) {
  if (xs.size() < 2) return 0.0;
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

inline double median(std::vector<double> xs) {
  if (xs.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(xs.begin(), xs.end());
  const std::size_t m = xs.size() / 2;
  return xs.size() % 2 ? xs[m] : 0.5 * (xs[m - 1] + xs[m]);
}

inline double mean_of(const std::vector<double>& xs) {
  if (xs.empty()) return std::numeric_limits<double>::quiet_NaN();
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

}  // namespace detail

/// Loads or generates the described environment; generated ones use seed + offset.
inline DoubleAuctionEnv make_env(const EnvSpec& spec, std::uint64_t offset = 0) {
  if (spec.path) {
    try {
      return load_double_auction(*spec.path);
    } catch (const EnvFormatError& e) {
      throw UsageError(e.what());
    }
  }
  return generate_double_auction(spec.players, spec.types, spec.seed + offset);
}

/// Theta and rho from the configured modes. Feasibility modes need the
/// exact moments.
inline DesignParams resolve_design(const ExperimentConfig& c, const ProfileSpace& space,
                                   const ExactMoments* moments) {
  if ((c.theta_mode == ThetaMode::kFeasibility || c.rho_mode == RhoMode::kFeasibility) &&
      moments == nullptr) {
    throw UsageError("feasibility-forcing modes need exact moments");
  }
  ThetaTable theta = c.theta_mode == ThetaMode::kFeasibility
                         ? theta_for_feasibility(*moments)
                         : zero_theta(space.radices());
  double rho = 0.0;
  if (c.rho_mode == RhoMode::kExplicit) {
    rho = c.rho;
  } else if (c.rho_mode == RhoMode::kFeasibility) {
    const DesignParams at_zero(theta, 0.0);
    const auto kappa = kappa_vector(*moments, at_zero);
    rho = std::min(
        feasibility_condition(kappa, moments->mean_w, 0.0, space.n_players()).slack, 0.0);
  }
  return DesignParams(std::move(theta), rho);
}

/// Raw accuracies handed to the estimators, with the unit conversion used.
struct EpsResolution {
  double kappa_raw = 0.0;
  double lambda_raw = 0.0;
  double kappa_scaled = 0.0;
  double lambda_scaled = 0.0;
  double kappa_bound = 1.0;
  double lambda_bound = 1.0;
  EpsUnits units = EpsUnits::kRaw;

  nlohmann::json to_json() const {
    return {{"units", vcgpac::to_string(units)},
            {"eps_kappa_raw", kappa_raw},
            {"eps_lambda_raw", lambda_raw},
            {"eps_kappa_scaled", kappa_scaled},
            {"eps_lambda_scaled", lambda_scaled},
            {"kappa_reward_bound", kappa_bound},
            {"lambda_reward_bound", lambda_bound}};
  }
};

inline EpsResolution resolve_eps(const DoubleAuctionEnv& env, const DesignParams& params,
                                 double eps_kappa, double eps_lambda, EpsUnits units) {
  EpsResolution r;
  r.units = units;
  r.kappa_bound = kappa_reward_bound(env, params);
  r.lambda_bound = lambda_reward_bound(env);
  const RewardScaler ks(r.kappa_bound);
  const RewardScaler ls(r.lambda_bound);
  if (units == EpsUnits::kRaw) {
    r.kappa_raw = eps_kappa;
    r.lambda_raw = eps_lambda;
    r.kappa_scaled = ks.scale_tolerance(eps_kappa);
    r.lambda_scaled = ls.scale_tolerance(eps_lambda);
  } else {
    r.kappa_scaled = eps_kappa;
    r.lambda_scaled = eps_lambda;
    r.kappa_raw = ks.unscale_tolerance(eps_kappa);
    r.lambda_raw = ls.unscale_tolerance(eps_lambda);
  }
  if (!(r.kappa_scaled < 1.0) || !(r.lambda_scaled < 1.0)) {
    throw UsageError(fmt::format(
        "eps is too coarse for this environment: scaled tolerances {} and {} must be < 1",
        r.kappa_scaled, r.lambda_scaled));
  }
  return r;
}

inline nlohmann::json design_json(const ExperimentConfig& c, const DesignParams& p) {
  return {{"theta_mode", to_string(c.theta_mode)},
          {"rho_mode", to_string(c.rho_mode)},
          {"rho", p.rho()},
          {"theta", p.theta()}};
}

// ---------------------------------------------------------------- gen-env

inline int cmd_gen_env(const ExperimentConfig& c, std::ostream& out) {
  validate(c);
  const DoubleAuctionEnv env = make_env(c.env);
  detail::write_to(c.out, out, [&](std::ostream& o) { o << to_json(env).dump(2) << '\n'; });
  return kExitOk;
}

// ------------------------------------------------------------ solve-exact

struct ExactSolution {
  DesignParams params;
  ExactMoments moments;
  FeasibilityReport report;
  Verdict verdict;
  ConstantPivotRule sbb;
  ConstantPivotRule ir;
};

inline ExactSolution solve_exact(const ExperimentConfig& c, const DoubleAuctionEnv& env,
                                 EvaluationCache& cache) {
  ExactMoments m = exact_moments(env, cache);
  DesignParams params = resolve_design(c, env.space(), &m);
  const auto kappa = kappa_vector(m, params);
  FeasibilityReport report = feasibility_condition(kappa, m.mean_w, params.rho(), env.n_players());
  const Verdict verdict = classify(report, env.prior().kind());
  ConstantPivotRule sbb = pivot_rule_sbb(report, uniform_allocation(report));
  ConstantPivotRule ir = pivot_rule_ir(report);
  return {std::move(params), std::move(m), std::move(report), verdict, std::move(sbb),
          std::move(ir)};
}

inline int cmd_solve_exact(const ExperimentConfig& c, std::ostream& out) {
  validate(c);
  const DoubleAuctionEnv env = make_env(c.env);
  detail::require_enumerable(env.space(), "solve-exact");
  EvaluationCache cache(env.space(), EvaluationCache::Storage::kDense);
  const ExactSolution s = solve_exact(c, env, cache);

  auto mech_json = [&](const ConstantPivotRule& rule) {
    nlohmann::json utilities = nlohmann::json::array();
    for (std::size_t n = 0; n < env.n_players(); ++n) {
      nlohmann::json row = nlohmann::json::array();
      for (TypeIndex k = 0; k < env.n_types(n); ++k) {
        if (s.moments.marginal[n][k] > 0.0) {
          row.push_back(expected_utility(s.moments, rule, n, k));
        } else {
          row.push_back(nullptr);
        }
      }
      utilities.push_back(std::move(row));
    }
    nlohmann::json j = to_json(rule, s.params);
    j["expected_revenue"] = expected_revenue(s.moments, rule);
    j["expected_utility"] = std::move(utilities);
    return j;
  };

  if (c.format == OutputFormat::kJson) {
    nlohmann::json j = {{"n_players", env.n_players()},
                        {"type_sets", env.type_sets()},
                        {"prior_kind", to_string(env.prior().kind())},
                        {"design", design_json(c, s.params)},
                        {"report", to_json(s.report)},
                        {"verdict", to_string(s.verdict)},
                        {"mechanisms", {{"sbb", mech_json(s.sbb)}, {"ir", mech_json(s.ir)}}},
                        {"cache", {{"unique_evals", cache.unique_evals()},
                                   {"total_requests", cache.total_requests()}}}};
    detail::write_to(c.out, out, [&](std::ostream& o) { o << j.dump(2) << '\n'; });
  } else {
    Table t;
    t.columns = {"player", "type_index", "type_value", "probability", "cond_mean_w",
                 "theta", "kappa", "eta_sbb", "utility_sbb", "eta_ir", "utility_ir",
                 "mean_w", "rho", "slack", "verdict", "revenue_sbb", "revenue_ir"};
    const double rev_sbb = expected_revenue(s.moments, s.sbb);
    const double rev_ir = expected_revenue(s.moments, s.ir);
    for (std::size_t n = 0; n < env.n_players(); ++n) {
      for (TypeIndex k = 0; k < env.n_types(n); ++k) {
        const double p = s.moments.marginal[n][k];
        const double nan = std::numeric_limits<double>::quiet_NaN();
        t.add({cell(n), cell(k), std::int64_t{env.type_value(n, k)}, p,
               s.moments.cond_mean[n][k], s.params.theta(n, k), s.report.kappa[n],
               s.sbb.eta[n], p > 0.0 ? expected_utility(s.moments, s.sbb, n, k) : nan,
               s.ir.eta[n], p > 0.0 ? expected_utility(s.moments, s.ir, n, k) : nan,
               s.report.mean_w, s.report.rho, s.report.slack,
               std::string(to_string(s.verdict)), rev_sbb, rev_ir});
      }
    }
    detail::write_to(c.out, out, [&](std::ostream& o) { write_csv(o, t); });
  }
  return s.report.feasible_by_condition ? kExitOk : kExitInfeasible;
}

// ------------------------------------------------------------------ learn

inline int cmd_learn(const ExperimentConfig& c, std::ostream& out) {
  validate(c);
  const DoubleAuctionEnv env = make_env(c.env);
  if (env.n_players() < 2) throw UsageError("learning needs at least two players");

  const bool need_exact = c.check_exact || c.theta_mode == ThetaMode::kFeasibility ||
                          c.rho_mode == RhoMode::kFeasibility;
  std::optional<EvaluationCache> exact_cache;
  std::optional<ExactMoments> moments;
  if (need_exact) {
    detail::require_enumerable(env.space(), "feasibility modes and --check-exact");
    exact_cache.emplace(env.space(), EvaluationCache::Storage::kDense);
    moments = exact_moments(env, *exact_cache);
  }
  const DesignParams params = resolve_design(c, env.space(), moments ? &*moments : nullptr);
  const EpsResolution eps = resolve_eps(env, params, c.eps, c.eps_lambda_value(), c.eps_units);

  EvaluationCache cache(env.space());
  LearnOptions options;
  options.rho_prime = c.rho_prime;
  options.bandit.record_trace = c.record_trace;
  options.bandit.trace_stride = c.trace_stride;
  options.threads = c.parallel;
  const auto outcome = learn_mechanism(env, params, eps.kappa_raw, eps.lambda_raw, c.delta,
                                       c.env.seed, cache, options);
  const LearnTrace& tr = outcome.trace;

  nlohmann::json trace = to_json(tr);
  trace["seed"] = c.env.seed;
  trace["eps"] = eps.to_json();
  trace["design"] = design_json(c, params);
  trace["verdict"] = tr.simplex_nonempty ? "certified" : "empty_simplex";
  if (c.check_exact && outcome.mechanism) {
    const auto kappa = kappa_vector(*moments, params);
    const double lambda =
        moments->mean_w + tr.rho_used / static_cast<double>(env.n_players() - 1);
    const ConstantPivotRule& rule = outcome.mechanism->pivot();
    double min_margin = std::numeric_limits<double>::infinity();
    std::vector<double> kappa_err;
    for (std::size_t n = 0; n < env.n_players(); ++n) {
      kappa_err.push_back(std::fabs(tr.kappa_hat[n] - kappa[n]));
      for (TypeIndex k = 0; k < env.n_types(n); ++k) {
        if (moments->marginal[n][k] > 0.0) {
          min_margin = std::min(
              min_margin, expected_utility(*moments, rule, n, k) - params.theta(n, k));
        }
      }
    }
    const double revenue = expected_revenue(*moments, rule);
    trace["exact_check"] = {{"kappa", kappa},
                            {"kappa_abs_error", kappa_err},
                            {"mean_w", moments->mean_w},
                            {"lambda", lambda},
                            {"lambda_abs_error", std::fabs(tr.lambda_hat - lambda)},
                            {"expected_revenue", revenue},
                            {"min_ir_margin", min_margin},
                            {"ir_ok", min_margin >= -kExactTolerance},
                            {"wbb_ok", revenue >= params.rho() - kExactTolerance}};
  }
  nlohmann::json mech = outcome.mechanism
                            ? to_json(outcome.mechanism->pivot(), params)
                            : nlohmann::json{{"eta", nullptr}, {"verdict", "empty_simplex"}};

  if (c.out) {
    const auto dir = detail::make_out_dir(*c.out);
    detail::write_file(dir / "mechanism.json", mech.dump(2) + "\n");
    detail::write_file(dir / "learn_trace.json", trace.dump(2) + "\n");
    std::ostringstream csv;
    write_learn_trace_csv(csv, tr, params);
    detail::write_file(dir / "bandit_trace.csv", csv.str());
  } else {
    out << nlohmann::json{{"mechanism", mech}, {"trace", trace}}.dump(2) << '\n';
  }
  return tr.simplex_nonempty ? kExitOk : kExitInfeasible;
}

// ------------------------------------------------------------------- eval

struct UtilityPoint {
  std::size_t player = 0;
  TypeIndex type_index = 0;
  TypeValue type_value = 0;
  double probability = 0.0;
  double theta = 0.0;
  double exact = 0.0;
  double learned = 0.0;
};

struct Replication {
  std::uint64_t seed = 0;
  std::vector<UtilityPoint> utilities;
  double rho = 0.0;
  double rho_used = 0.0;
  double exact_revenue = 0.0;
  double learned_revenue = 0.0;
  std::size_t total_pulls = 0;
  std::uint64_t unique_evals = 0;
  std::uint64_t total_requests = 0;
  EpsResolution eps;
};

/// One seed of the evaluation protocol: the exact rule and the plug-in
/// learned rule (same form, estimated kappa and E[w*], target rho' when
/// given), both evaluated with exact expectations.
inline Replication evaluate_replication(const ExperimentConfig& c, const DoubleAuctionEnv& env,
                                        double eps_kappa, double eps_lambda,
                                        std::uint64_t seed) {
  detail::require_enumerable(env.space(), "evaluation");
  EvaluationCache exact_cache(env.space(), EvaluationCache::Storage::kDense);
  const ExactMoments m = exact_moments(env, exact_cache);
  const DesignParams params = resolve_design(c, env.space(), &m);
  const auto kappa = kappa_vector(m, params);
  const FeasibilityReport report =
      feasibility_condition(kappa, m.mean_w, params.rho(), env.n_players());
  const ConstantPivotRule exact_rule = c.rule == PlugInRule::kSbb
                                           ? pivot_rule_sbb(report, uniform_allocation(report))
                                           : pivot_rule_ir(report);

  Replication r;
  r.seed = seed;
  r.eps = resolve_eps(env, params, eps_kappa, eps_lambda, c.eps_units);
  EvaluationCache cache(env.space());
  LearnOptions options;
  options.rho_prime = c.rho_prime;
  const auto outcome = learn_mechanism(env, params, r.eps.kappa_raw, r.eps.lambda_raw, c.delta,
                                       seed, cache, options);
  const LearnTrace& tr = outcome.trace;
  const ConstantPivotRule learned = plug_in_rule(tr.kappa_hat, tr.mean_w_hat, tr.rho_used, c.rule);

  r.rho = params.rho();
  r.rho_used = tr.rho_used;
  r.exact_revenue = expected_revenue(m, exact_rule);
  r.learned_revenue = expected_revenue(m, learned);
  r.total_pulls = tr.total_pulls();
  r.unique_evals = tr.unique_evals;
  r.total_requests = tr.total_requests;
  for (std::size_t n = 0; n < env.n_players(); ++n) {
    for (TypeIndex k = 0; k < env.n_types(n); ++k) {
      if (!(m.marginal[n][k] > 0.0)) continue;
      r.utilities.push_back({n, k, env.type_value(n, k), m.marginal[n][k], params.theta(n, k),
                             expected_utility(m, exact_rule, n, k),
                             expected_utility(m, learned, n, k)});
    }
  }
  return r;
}

inline std::vector<Replication> run_replications(const ExperimentConfig& c, double eps_kappa,
                                                 double eps_lambda) {
  std::vector<Replication> reps(c.reps);
  parallel_for(c.reps, c.parallel, [&](std::size_t i) {
    const DoubleAuctionEnv env = make_env(c.env, i);
    reps[i] = evaluate_replication(c, env, eps_kappa, eps_lambda, c.env.seed + i);
  });
  return reps;
}

inline nlohmann::json eval_meta(const ExperimentConfig& c) {
  return {{"eps", c.eps},
          {"eps_lambda", c.eps_lambda_value()},
          {"eps_units", to_string(c.eps_units)},
          {"delta", c.delta},
          {"theta_mode", to_string(c.theta_mode)},
          {"rho_mode", to_string(c.rho_mode)},
          {"rho_prime", c.rho_prime ? nlohmann::json(*c.rho_prime) : nlohmann::json(nullptr)},
          {"rule", c.rule == PlugInRule::kSbb ? "sbb" : "ir"},
          {"reps", c.reps},
          {"base_seed", c.env.seed}};
}

struct EvalTables {
  Table utilities;
  Table revenue;
};

inline EvalTables eval_tables(const ExperimentConfig& c, const std::vector<Replication>& reps) {
  EvalTables t;
  t.utilities.columns = {"rep",   "seed",          "player",         "type_index", "type_value",
                         "probability", "theta", "exact_utility", "learned_utility"};
  t.revenue.columns = {"rep",           "seed",           "rho",
                       "rho_used",      "exact_revenue",  "learned_revenue",
                       "total_pulls",   "unique_evals",   "total_requests",
                       "eps_kappa_raw", "eps_kappa_scaled", "kappa_reward_bound"};
  t.utilities.meta = t.revenue.meta = eval_meta(c);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const Replication& r = reps[i];
    for (const UtilityPoint& u : r.utilities) {
      t.utilities.add({cell(i), r.seed, cell(u.player), cell(u.type_index),
                       std::int64_t{u.type_value}, u.probability, u.theta, u.exact, u.learned});
    }
    t.revenue.add({cell(i), r.seed, r.rho, r.rho_used, r.exact_revenue, r.learned_revenue,
                   cell(r.total_pulls), r.unique_evals, r.total_requests, r.eps.kappa_raw,
                   r.eps.kappa_scaled, r.eps.kappa_bound});
  }
  return t;
}

inline int cmd_eval(const ExperimentConfig& c, std::ostream& out) {
  validate(c);
  const auto reps = run_replications(c, c.eps, c.eps_lambda_value());
  const EvalTables t = eval_tables(c, reps);
  if (c.out) {
    const auto dir = detail::make_out_dir(*c.out);
    const char* ext = detail::table_ext(c.format);
    detail::write_file(dir / (std::string("utilities") + ext),
                       detail::table_text(t.utilities, c.format));
    detail::write_file(dir / (std::string("revenue") + ext),
                       detail::table_text(t.revenue, c.format));
  } else if (c.format == OutputFormat::kJson) {
    out << nlohmann::json{{"utilities", to_json(t.utilities)}, {"revenue", to_json(t.revenue)}}
               .dump(2)
        << '\n';
  } else {
    write_csv(out, t.utilities);
    out << '\n';
    write_csv(out, t.revenue);
  }
  return kExitOk;
}

// ------------------------------------------------------------------- rmse

inline Table rmse_table(const ExperimentConfig& c) {
  Table t;
  t.columns = {"eps", "delta", "reps", "mean_total_pulls", "rmse_utility", "rmse_revenue"};
  t.meta = eval_meta(c);
  t.meta.erase("eps");
  t.meta.erase("eps_lambda");
  t.meta["eps_list"] = c.eps_list;
  const std::size_t n_eps = c.eps_list.size();
  std::vector<Replication> all(n_eps * c.reps);
  parallel_for(all.size(), c.parallel, [&](std::size_t task) {
    const std::size_t e = task / c.reps;
    const std::size_t i = task % c.reps;
    const DoubleAuctionEnv env = make_env(c.env, i);
    all[task] =
        evaluate_replication(c, env, c.eps_list[e], c.eps_list[e], c.env.seed + i);
  });
  for (std::size_t e = 0; e < n_eps; ++e) {
    double su = 0.0, sr = 0.0, pulls = 0.0;
    std::size_t nu = 0;
    for (std::size_t i = 0; i < c.reps; ++i) {
      const Replication& r = all[e * c.reps + i];
      for (const UtilityPoint& u : r.utilities) {
        su += (u.learned - u.exact) * (u.learned - u.exact);
        ++nu;
      }
      sr += (r.learned_revenue - r.exact_revenue) * (r.learned_revenue - r.exact_revenue);
      pulls += static_cast<double>(r.total_pulls);
    }
    const auto reps = static_cast<double>(c.reps);
    t.add({c.eps_list[e], c.delta, cell(c.reps), pulls / reps,
           std::sqrt(su / static_cast<double>(nu)), std::sqrt(sr / reps)});
  }
  return t;
}

inline int cmd_rmse(const ExperimentConfig& c, std::ostream& out) {
  validate(c);
  const Table t = rmse_table(c);
  detail::write_to(c.out, out, [&](std::ostream& o) { write_table(o, t, c.format); });
  return kExitOk;
}

// ----------------------------------------------------------- bandit-bench

struct PullStats {
  double mean = 0.0;
  double stddev = 0.0;
  double median = 0.0;
};

inline PullStats pull_stats(const std::vector<double>& xs) {
  PullStats s;
  s.mean = detail::mean_of(xs);
  s.stddev = detail::sample_stddev(xs, s.mean);
  s.median = detail::median(xs);
  return s;
}

struct BenchPoint {
  std::size_t arms = 0;
  double eps = 0.0;
  double delta = 0.0;
  PullStats bme;
  PullStats bai;
};

/// SE-BME and SE-BAI total pulls on the Bernoulli ladder (k - 0.5) / K.
/// Run r of every point draws from substream r of the seed.
inline BenchPoint bandit_bench_point(std::size_t arms, double eps, double delta,
                                     std::size_t reps, std::uint64_t seed) {
  BenchPoint p{arms, eps, delta, {}, {}};
  std::vector<double> bme(reps), bai(reps);
  for (std::size_t r = 0; r < reps; ++r) {
    BernoulliArms a(bernoulli_ladder(arms));
    Rng rng_bme = Rng::substream(seed, r);
    bme[r] = static_cast<double>(se_bme(a, eps, delta, rng_bme).total_pulls);
    Rng rng_bai = Rng::substream(seed, r);
    bai[r] = static_cast<double>(se_bai(a, eps, delta, rng_bai).total_pulls);
  }
  p.bme = pull_stats(bme);
  p.bai = pull_stats(bai);
  return p;
}

inline Table bandit_bench_table(const ExperimentConfig& c) {
  struct Job {
    std::size_t arms;
    double eps;
    double delta;
  };
  std::vector<Job> jobs;
  for (std::size_t k : c.arm_list) {
    for (double e : c.eps_list) {
      for (double d : c.delta_list) jobs.push_back({k, e, d});
    }
  }
  std::vector<BenchPoint> points(jobs.size());
  parallel_for(jobs.size(), c.parallel, [&](std::size_t i) {
    points[i] = bandit_bench_point(jobs[i].arms, jobs[i].eps, jobs[i].delta, c.reps, c.env.seed);
  });
  Table t;
  t.columns = {"arms",           "eps",          "delta",           "reps",
               "bme_mean_pulls", "bme_std_pulls", "bme_median_pulls", "bai_mean_pulls",
               "bai_std_pulls",  "bai_median_pulls"};
  t.meta = {{"instance", "bernoulli_ladder"}, {"seed", c.env.seed}};
  for (const BenchPoint& p : points) {
    t.add({cell(p.arms), p.eps, p.delta, cell(c.reps), p.bme.mean, p.bme.stddev, p.bme.median,
           p.bai.mean, p.bai.stddev, p.bai.median});
  }
  return t;
}

inline int cmd_bandit_bench(const ExperimentConfig& c, std::ostream& out) {
  validate(c);
  const Table t = bandit_bench_table(c);
  detail::write_to(c.out, out, [&](std::ostream& o) { write_table(o, t, c.format); });
  return kExitOk;
}

// ---------------------------------------------------------------- scaling

struct ScalingPoint {
  std::size_t players = 0;
  std::size_t types = 0;
  std::uint64_t seed = 0;
  std::uint64_t unique_evals = 0;
  std::uint64_t total_requests = 0;
  std::size_t total_pulls = 0;
  bool simplex_nonempty = false;
};

/// w* evaluation counts of one learn_mechanism run on a generated auction.
inline ScalingPoint scaling_point(const ExperimentConfig& c, std::size_t players,
                                  std::size_t types, std::uint64_t seed) {
  const DoubleAuctionEnv env = generate_double_auction(players, types, seed);
  const DesignParams params(zero_theta(env.space().radices()),
                            c.rho_mode == RhoMode::kExplicit ? c.rho : 0.0);
  const EpsResolution eps = resolve_eps(env, params, c.eps, c.eps_lambda_value(), c.eps_units);
  EvaluationCache cache(env.space());
  LearnOptions options;
  options.rho_prime = c.rho_prime;
  const auto outcome =
      learn_mechanism(env, params, eps.kappa_raw, eps.lambda_raw, c.delta, seed, cache, options);
  return {players,
          types,
          seed,
          outcome.trace.unique_evals,
          outcome.trace.total_requests,
          outcome.trace.total_pulls(),
          outcome.trace.simplex_nonempty};
}

inline Cell power_cell(std::size_t base, std::size_t exp, std::size_t factor = 1) {
  std::uint64_t v = factor;
  for (std::size_t i = 0; i < exp; ++i) {
    if (v > std::numeric_limits<std::uint64_t>::max() / base) {
      return static_cast<double>(factor) *
             std::pow(static_cast<double>(base), static_cast<double>(exp));
    }
    v *= base;
  }
  return v;
}

inline Table scaling_table(const ExperimentConfig& c) {
  struct Job {
    std::string axis;
    std::size_t players;
    std::size_t types;
    std::size_t rep;
  };
  std::vector<Job> jobs;
  for (std::size_t n : c.sweep_n ? c.n_list : std::vector<std::size_t>{}) {
    for (std::size_t r = 0; r < c.reps; ++r) jobs.push_back({"N", n, c.env.types, r});
  }
  for (std::size_t k : c.sweep_k ? c.k_list : std::vector<std::size_t>{}) {
    for (std::size_t r = 0; r < c.reps; ++r) jobs.push_back({"K", c.env.players, k, r});
  }
  std::vector<ScalingPoint> points(jobs.size());
  parallel_for(jobs.size(), c.parallel, [&](std::size_t i) {
    points[i] = scaling_point(c, jobs[i].players, jobs[i].types, c.env.seed + jobs[i].rep);
  });
  Table t;
  t.columns = {"axis",          "N",           "K",           "rep",
               "seed",          "baseline_unique", "baseline_total", "unique_evals",
               "total_requests", "total_pulls", "unique_fraction", "simplex_nonempty"};
  t.meta = {{"eps", c.eps},
            {"eps_lambda", c.eps_lambda_value()},
            {"eps_units", to_string(c.eps_units)},
            {"delta", c.delta}};
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const ScalingPoint& p = points[i];
    const double baseline =
        std::pow(static_cast<double>(p.types), static_cast<double>(p.players));
    t.add({jobs[i].axis, cell(p.players), cell(p.types), cell(jobs[i].rep), p.seed,
           power_cell(p.types, p.players), power_cell(p.types, p.players, p.players),
           p.unique_evals, p.total_requests, cell(p.total_pulls),
           static_cast<double>(p.unique_evals) / baseline,
           std::int64_t{p.simplex_nonempty ? 1 : 0}});
  }
  return t;
}

inline int cmd_scaling(const ExperimentConfig& c, std::ostream& out) {
  validate(c);
  const Table t = scaling_table(c);
  detail::write_to(c.out, out, [&](std::ostream& o) { write_table(o, t, c.format); });
  return kExitOk;
}

}  // namespace vcgpac
