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

#include <exception>
#include <functional>
#include <map>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vcgpac/core/errors.hpp"
#include "vcgpac/experiments/commands.hpp"

namespace vcgpac::cli {

namespace detail {

template <class E>
CLI::CheckedTransformer enum_choice(const std::map<std::string, E>& choices) {
  return CLI::CheckedTransformer(choices, CLI::ignore_case);
}

inline void add_env_options(CLI::App& sub, ExperimentConfig& c, bool allow_file = true) {
  CLI::Option* players = sub.add_option("--players,-N", c.env.players, "number of players")
                             ->capture_default_str();
  CLI::Option* types = sub.add_option("--types,-K", c.env.types, "types per player")
                           ->capture_default_str();
  sub.add_option("--seed", c.env.seed, "seed (environment generation and sampling)")
      ->capture_default_str();
  if (allow_file) {
    sub.add_option("--env", c.env.path, "environment JSON file")
        ->check(CLI::ExistingFile)
        ->excludes(players)
        ->excludes(types);
  }
}

inline void add_design_options(CLI::App& sub, ExperimentConfig& c) {
  sub.add_option("--theta-mode", c.theta_mode, "zero | feasibility")
      ->transform(enum_choice<ThetaMode>(
          {{"zero", ThetaMode::kZero}, {"feasibility", ThetaMode::kFeasibility}}));
  sub.add_option("--rho-mode", c.rho_mode, "zero | feasibility | explicit")
      ->transform(enum_choice<RhoMode>({{"zero", RhoMode::kZero},
                                        {"feasibility", RhoMode::kFeasibility},
                                        {"explicit", RhoMode::kExplicit}}));
  sub.add_option("--rho", c.rho, "revenue target (implies --rho-mode explicit)");
}

inline void add_pac_options(CLI::App& sub, ExperimentConfig& c) {
  sub.add_option("--eps", c.eps, "accuracy of the kappa estimates")->capture_default_str();
  sub.add_option("--eps-lambda", c.eps_lambda, "accuracy of the lambda estimate (default --eps)");
  sub.add_option("--delta", c.delta, "overall failure probability")->capture_default_str();
  sub.add_option("--eps-units", c.eps_units, "raw (w* units) | scaled ([0,1] rewards)")
      ->transform(enum_choice<EpsUnits>({{"raw", EpsUnits::kRaw}, {"scaled", EpsUnits::kScaled}}));
  sub.add_option("--rho-prime", c.rho_prime, "raised revenue target used when learning");
}

inline void add_output_options(CLI::App& sub, ExperimentConfig& c, const std::string& out_help) {
  sub.add_option("--out,-o", c.out, out_help);
  sub.add_option("--format", c.format, "csv | json")
      ->transform(enum_choice<OutputFormat>(
          {{"csv", OutputFormat::kCsv}, {"json", OutputFormat::kJson}}));
  sub.add_option("--parallel", c.parallel, "worker threads")->capture_default_str();
}

inline void add_rule_option(CLI::App& sub, ExperimentConfig& c) {
  sub.add_option("--rule", c.rule, "sbb | ir")
      ->transform(enum_choice<PlugInRule>({{"sbb", PlugInRule::kSbb}, {"ir", PlugInRule::kIr}}));
}

}  // namespace detail

/// Entry point of the vcgpac tool. Returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"VCG mechanisms with constant pivot rules: exact and PAC-learned"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "help for every subcommand");

  struct Entry {
    CLI::App* sub;
    ExperimentConfig config;
    std::function<int(const ExperimentConfig&, std::ostream&)> handler;
  };
  std::vector<std::unique_ptr<Entry>> entries;
  auto add = [&](const std::string& name, const std::string& help, auto handler) -> Entry& {
    auto e = std::make_unique<Entry>();
    e->sub = app.add_subcommand(name, help);
    e->config.command = name;
    e->handler = handler;
    entries.push_back(std::move(e));
    return *entries.back();
  };

  {
    Entry& e = add("gen-env", "generate a random double-auction environment", cmd_gen_env);
    detail::add_env_options(*e.sub, e.config);
    e.sub->add_option("--out,-o", e.config.out, "output file (default stdout)");
  }
  {
    Entry& e = add("solve-exact", "exact feasibility report and SBB/IR mechanisms",
                   cmd_solve_exact);
    detail::add_env_options(*e.sub, e.config);
    detail::add_design_options(*e.sub, e.config);
    detail::add_output_options(*e.sub, e.config, "output file (default stdout)");
  }
  {
    Entry& e = add("learn", "learn a pivot rule with PAC guarantees", cmd_learn);
    detail::add_env_options(*e.sub, e.config);
    detail::add_design_options(*e.sub, e.config);
    detail::add_pac_options(*e.sub, e.config);
    detail::add_output_options(*e.sub, e.config, "output directory (default: JSON on stdout)");
    e.sub->add_flag("!--no-trace", e.config.record_trace, "skip the per-round bandit trace");
    e.sub->add_option("--trace-stride", e.config.trace_stride, "keep every n-th trace round");
    e.sub->add_flag("--check-exact", e.config.check_exact,
                    "compare against exact enumeration");
  }
  {
    Entry& e = add("eval", "exact vs learned expected utilities and revenue", cmd_eval);
    detail::add_env_options(*e.sub, e.config);
    detail::add_design_options(*e.sub, e.config);
    detail::add_pac_options(*e.sub, e.config);
    detail::add_output_options(*e.sub, e.config, "output directory (default stdout)");
    detail::add_rule_option(*e.sub, e.config);
    e.sub->add_option("--reps", e.config.reps, "replications")->capture_default_str();
  }
  {
    Entry& e = add("rmse", "RMSE of learned utilities and revenue over an eps sweep", cmd_rmse);
    e.config.env.types = 4;
    detail::add_env_options(*e.sub, e.config);
    detail::add_design_options(*e.sub, e.config);
    detail::add_pac_options(*e.sub, e.config);
    detail::add_output_options(*e.sub, e.config, "output file (default stdout)");
    detail::add_rule_option(*e.sub, e.config);
    e.sub->add_option("--reps", e.config.reps, "seeds per eps")->capture_default_str();
    e.sub->add_option("--eps-list", e.config.eps_list, "eps values")->delimiter(',');
  }
  {
    Entry& e = add("bandit-bench", "SE-BME vs SE-BAI total pulls on a Bernoulli ladder",
                   cmd_bandit_bench);
    e.config.eps_list = {0.1};
    e.sub->add_option("--seed", e.config.env.seed, "seed")->capture_default_str();
    e.sub->add_option("--arms", e.config.arm_list, "arm counts")->delimiter(',');
    e.sub->add_option("--eps-list", e.config.eps_list, "eps values")->delimiter(',');
    e.sub->add_option("--delta-list", e.config.delta_list, "delta values")->delimiter(',');
    e.sub->add_option("--reps", e.config.reps, "runs per point")->capture_default_str();
    detail::add_output_options(*e.sub, e.config, "output file (default stdout)");
  }
  {
    Entry& e = add("scaling", "unique and total w* evaluations vs N and K", cmd_scaling);
    e.config.eps_units = EpsUnits::kScaled;
    e.config.reps = 1;
    detail::add_env_options(*e.sub, e.config, false);
    detail::add_pac_options(*e.sub, e.config);
    e.sub->add_option("--rho", e.config.rho, "revenue target");
    e.sub->add_option("--n-list", e.config.n_list, "player counts (K fixed at --types)")
        ->delimiter(',');
    e.sub->add_option("--k-list", e.config.k_list, "type counts (N fixed at --players)")
        ->delimiter(',');
    e.sub->add_option("--reps", e.config.reps, "seeds per point")->capture_default_str();
    e.sub->add_option_function<std::string>(
             "--axis",
             [&c = e.config](const std::string& axis) {
               c.sweep_n = axis != "K";
               c.sweep_k = axis != "N";
             },
             "N | K | both (default both)")
        ->check(CLI::IsMember({"N", "K", "both"}));
    detail::add_output_options(*e.sub, e.config, "output file (default stdout)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  for (auto& e : entries) {
    if (!e->sub->parsed()) continue;
    ExperimentConfig& c = e->config;
    const CLI::Option* rho = e->sub->get_option_no_throw("--rho");
    const CLI::Option* rho_mode = e->sub->get_option_no_throw("--rho-mode");
    if (rho != nullptr && rho->count() > 0 && (rho_mode == nullptr || rho_mode->count() == 0)) {
      c.rho_mode = RhoMode::kExplicit;
    }
    try {
      return e->handler(c, out);
    } catch (const UsageError& ex) {
      err << "error: " << ex.what() << '\n';
      return kExitUsage;
    } catch (const std::invalid_argument& ex) {
      err << "error: " << ex.what() << '\n';
      return kExitUsage;
    } catch (const std::length_error& ex) {
      err << "error: " << ex.what() << '\n';
      return kExitUsage;
    } catch (const std::exception& ex) {
      err << "fatal: " << ex.what() << '\n';
      return 1;
    }
  }
  return kExitUsage;
}

}  // namespace vcgpac::cli
