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
#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "oracles.hpp"
#include "vcgpac/env/generate.hpp"
#include "vcgpac/env/io.hpp"
#include "vcgpac/mechanism/exact.hpp"
#include "vcgpac/mechanism/feasibility.hpp"
#include "vcgpac/mechanism/io.hpp"
#include "vcgpac/mechanism/pivot_rules.hpp"
#include "vcgpac/mechanism/properties.hpp"
#include "vcgpac/mechanism/vcg.hpp"

namespace vcgpac {
namespace {

constexpr double kTol = 1e-9;

DoubleAuctionEnv two_player(TypeValue buyer, TypeValue seller) {
  return DoubleAuctionEnv({{buyer}, {seller}}, Prior::uniform(std::vector<std::size_t>{1, 1}),
                          DoubleAuction(static_cast<double>(std::max(buyer, -seller))));
}

// Completely dependent pair with x_1 = 1, x_2 = 4, p = 1/2.
DoubleAuctionEnv dependent_example() {
  return load_double_auction(VCGPAC_DATA_DIR "/dependent_example.json");
}

// Random theta with |theta| <= 2 and a random rho in [-2, 2].
DesignParams random_params(const ProfileSpace& space, Rng& rng) {
  ThetaTable theta = zero_theta(space.radices());
  for (auto& row : theta) {
    for (double& x : row) x = 4.0 * rng.uniform01() - 2.0;
  }
  return DesignParams(std::move(theta), 4.0 * rng.uniform01() - 2.0);
}

TEST(DesignParams, ValidatesTheta) {
  EXPECT_THROW(DesignParams({{1.0, 3.0}}, 0.0, 2.0), std::invalid_argument);
  EXPECT_THROW(DesignParams({{NAN}}, 0.0), std::invalid_argument);
  const DesignParams p({{1.0, -3.0}}, 0.5);
  EXPECT_EQ(p.theta_bound(), 3.0);
  EXPECT_EQ(p.with_rho(1.0).rho(), 1.0);
  EXPECT_THROW(p.check_against(ProfileSpace({3})), std::invalid_argument);
}

TEST(Exact, MatchesUncachedOracle) {
  Rng rng(100);
  for (int trial = 0; trial < 10; ++trial) {
    const auto env = generate_double_auction(3, 3, rng());
    EvaluationCache cache(env.space());
    const ExactMoments m = exact_moments(env, cache);
    const auto oracle = testing::oracle_moments(env);
    EXPECT_NEAR(m.mean_w, oracle.mean_w, 1e-12);
    const DesignParams params = random_params(env.space(), rng);
    for (std::size_t n = 0; n < 3; ++n) {
      double kappa = INFINITY;
      for (TypeIndex k = 0; k < 3; ++k) {
        EXPECT_NEAR(m.cond_mean[n][k], oracle.cond_mean[n][k], 1e-12);
        kappa = std::min(kappa, oracle.cond_mean[n][k] - params.theta(n, k));
      }
      EXPECT_NEAR(kappa_exact(env, params, n, cache), kappa, 1e-12);
    }
    EXPECT_EQ(cache.unique_evals(), 27u);
  }
}

TEST(Exact, CachedAndUncachedMeansAgreeBitForBit) {
  const auto env = generate_double_auction(4, 3, 5);
  EvaluationCache on(env.space());
  EvaluationCache off(env.space(), EvaluationCache::Storage::kDisabled);
  const ExactMoments a = exact_moments(env, on);
  const ExactMoments b = exact_moments(env, off);
  EXPECT_EQ(a.mean_w, b.mean_w);
  EXPECT_EQ(a.cond_mean, b.cond_mean);
}

TEST(Exact, SingleTypePlayers) {
  const auto env = two_player(5, -2);
  EvaluationCache cache(env.space());
  const DesignParams params({{0.5}, {-1.0}}, 0.0);
  EXPECT_EQ(kappa_exact(env, params, 0, cache), 3.0 - 0.5);
  EXPECT_EQ(kappa_exact(env, params, 1, cache), 3.0 + 1.0);
  EXPECT_EQ(mean_w_exact(env, cache), 3.0);
  EXPECT_THROW(kappa_exact(env, params, 2, cache), std::out_of_range);
}

TEST(Exact, UniformTwoByTwoIsAverageOfFourProfiles) {
  const auto env = DoubleAuctionEnv({{1, 3}, {-2, -1}},
                                    Prior::uniform(std::vector<std::size_t>{2, 2}),
                                    DoubleAuction(3));
  EvaluationCache cache(env.space());
  // w*: (1,-2)=0 (3,-2)=1 (1,-1)=0 (3,-1)=2
  EXPECT_DOUBLE_EQ(mean_w_exact(env, cache), 0.75);
}

TEST(Exact, DependentExampleMoments) {
  const auto env = dependent_example();
  EvaluationCache cache(env.space());
  const auto params = DesignParams::zero(env.space());
  EXPECT_EQ(kappa_exact(env, params, 0, cache), 1.0);  // min{x_1, x_2}
  EXPECT_EQ(kappa_exact(env, params, 1, cache), 1.0);
  EXPECT_EQ(mean_w_exact(env, cache), 0.5 * 1 + 0.5 * 4);
}

TEST(Exact, ZeroProbabilityTypesAreExcluded) {
  const auto env = DoubleAuctionEnv({{1, 5}, {-1}},
                                    Prior::independent({{1.0, 0.0}, {1.0}}), DoubleAuction(5));
  EvaluationCache cache(env.space());
  const ExactMoments m = exact_moments(env, cache);
  EXPECT_TRUE(std::isnan(m.cond_mean[0][1]));
  EXPECT_EQ(kappa_exact(env, DesignParams::zero(env.space()), 0, cache), 0.0);
}

TEST(Feasibility, DependentExampleSlack) {
  const FeasibilityReport r = feasibility_condition(std::vector<double>{1, 1}, 2.5, 0.0, 2);
  EXPECT_EQ(r.slack, -0.5);
  EXPECT_FALSE(r.feasible_by_condition);
  EXPECT_EQ(classify(r, PriorKind::kJoint), Verdict::kUnknown);
  EXPECT_EQ(classify(r, PriorKind::kIndependent), Verdict::kInfeasible);
}

TEST(Feasibility, DependentFamilyBoundary) {
  // kappa = x_1, E = (x_1 + x_2) / 2, feasible iff x_2 <= 3 x_1 at p = 1/2
  for (double x2 : {1.0, 2.0, 3.0}) {
    const auto r = feasibility_condition(std::vector<double>{1, 1}, 0.5 + 0.5 * x2, 0.0, 2);
    EXPECT_GE(r.slack, 0.0) << x2;
  }
  EXPECT_LT(feasibility_condition(std::vector<double>{1, 1}, 0.5 + 0.5 * 3.01, 0.0, 2).slack,
            0.0);
}

TEST(Feasibility, AllEqualConditionalMeans) {
  const auto r = feasibility_condition(std::vector<double>{2.5, 2.5, 2.5}, 2.5, 0.0, 3);
  EXPECT_EQ(r.slack, 2.5);
  EXPECT_TRUE(r.feasible_by_condition);
  EXPECT_EQ(classify(r, PriorKind::kIndependent), Verdict::kFeasible);
  EXPECT_THROW(feasibility_condition(std::vector<double>{1.0}, 0.0, 0.0, 2),
               std::invalid_argument);
}

TEST(PivotRules, SbbUniformMatchesClampFreeIr) {
  const auto r = feasibility_condition(std::vector<double>{3, 2, 4}, 2.0, 1.0, 3);
  const auto sbb = pivot_rule_sbb(r, uniform_allocation(r));
  const auto ir = pivot_rule_ir(r);
  EXPECT_EQ(sbb.eta, ir.eta);  // slack 4 >= 0
  EXPECT_EQ(sbb.provenance, Provenance::kExactSbb);
  EXPECT_DOUBLE_EQ(std::accumulate(sbb.eta.begin(), sbb.eta.end(), 0.0), 2 * 2.0 + 1.0);
}

TEST(PivotRules, ZeroSlackGivesKappa) {
  const auto r = feasibility_condition(std::vector<double>{1, 1}, 2.0, 0.0, 2);
  ASSERT_EQ(r.slack, 0.0);
  EXPECT_EQ(pivot_rule_sbb(r, uniform_allocation(r)).eta, (std::vector<double>{1, 1}));
}

TEST(PivotRules, AllocationMismatchIsRejected) {
  const auto r = feasibility_condition(std::vector<double>{3, 2}, 1.0, 0.0, 2);
  EXPECT_THROW(pivot_rule_sbb(r, SimplexAllocation{{1.0, 1.0}, 4.0}), std::invalid_argument);
  EXPECT_THROW(pivot_rule_sbb(r, SimplexAllocation{{1.0, 1.0}, r.slack}),
               std::invalid_argument);
  EXPECT_THROW(pivot_rule_sbb(r, SimplexAllocation{{1.0}, r.slack}), std::invalid_argument);
  const auto w = weighted_allocation(r, std::vector<double>{1.0, 3.0});
  EXPECT_DOUBLE_EQ(w.delta[1], 3.0);
  EXPECT_THROW(weighted_allocation(r, std::vector<double>{0.0, 0.0}), std::invalid_argument);
}

TEST(PivotRules, SbbRevenueIsRhoAndIrHoldsOnRandomInstances) {
  Rng rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const auto env = testing::random_small_auction(rng, 4, 4);
    EvaluationCache cache(env.space());
    const ExactMoments m = exact_moments(env, cache);
    const DesignParams params = random_params(env.space(), rng);
    const auto kappa = kappa_vector(m, params);
    const auto r = feasibility_condition(kappa, m.mean_w, params.rho(), env.n_players());
    const auto sbb = pivot_rule_sbb(r, uniform_allocation(r));
    const auto ir = pivot_rule_ir(r);
    const auto weighted = pivot_rule_sbb(
        r, weighted_allocation(r, std::vector<double>(env.n_players(), 1.0 + trial)));

    EXPECT_NEAR(expected_revenue(m, sbb), params.rho(), kTol);
    EXPECT_NEAR(expected_revenue(m, weighted), params.rho(), kTol);
    EXPECT_NEAR(testing::oracle_revenue(env, sbb.eta), params.rho(), kTol);
    for (std::size_t n = 0; n < env.n_players(); ++n) {
      for (TypeIndex k = 0; k < env.n_types(n); ++k) {
        EXPECT_GE(expected_utility(m, ir, n, k), params.theta(n, k) - kTol);
      }
    }
    if (r.slack < 0) {
      EXPECT_EQ(ir.eta, kappa);
      EXPECT_NEAR(params.rho() - expected_revenue(m, ir), -r.slack, kTol);
    } else {
      EXPECT_NEAR(expected_revenue(m, ir), params.rho(), kTol);
      for (std::size_t n = 0; n < env.n_players(); ++n) {
        for (TypeIndex k = 0; k < env.n_types(n); ++k) {
          EXPECT_GE(expected_utility(m, sbb, n, k), params.theta(n, k) - kTol);
        }
      }
    }
  }
}

TEST(PivotRules, AllZeroValues) {
  const auto env = DoubleAuctionEnv({{0}, {0}}, Prior::uniform(std::vector<std::size_t>{1, 1}),
                                    DoubleAuction(0));
  EvaluationCache cache(env.space());
  const auto m = exact_moments(env, cache);
  const auto r = feasibility_condition(kappa_vector(m, DesignParams::zero(env.space())),
                                       m.mean_w, 0.0, 2);
  const auto ir = pivot_rule_ir(r);
  EXPECT_EQ(ir.eta, (std::vector<double>{0, 0}));
  EXPECT_EQ(expected_revenue(m, ir), 0.0);
  EXPECT_EQ(expected_utility(m, ir, 0, 0), 0.0);
}

TEST(PivotRules, FeasibilityForcingRho) {
  const auto dep = dependent_example();
  EvaluationCache dep_cache(dep.space());
  EXPECT_EQ(rho_for_feasibility(dep, dep_cache), -0.5);

  Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const auto env = testing::random_small_auction(rng, 4, 3);
    EvaluationCache cache(env.space());
    const auto m = exact_moments(env, cache);
    const double rho = rho_for_feasibility(m);
    EXPECT_LE(rho, 0.0);
    const auto kappa = kappa_vector(m, DesignParams::zero(env.space()));
    const auto r = feasibility_condition(kappa, m.mean_w, rho, env.n_players());
    EXPECT_GE(r.slack, 0.0);
    const auto r0 = feasibility_condition(kappa, m.mean_w, 0.0, env.n_players());
    if (r0.slack >= 0) {
      EXPECT_EQ(rho, 0.0);
    }
  }
}

TEST(PivotRules, FeasibilityForcingTheta) {
  Rng rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const auto env = testing::random_small_auction(rng, 4, 3);
    EvaluationCache cache(env.space());
    const auto m = exact_moments(env, cache);
    const ThetaTable theta = theta_for_feasibility(m);
    const double n = static_cast<double>(env.n_players());
    for (std::size_t p = 0; p < env.n_players(); ++p) {
      for (TypeIndex k = 0; k < env.n_types(p); ++k) {
        EXPECT_LE(theta[p][k], 0.0);
        EXPECT_DOUBLE_EQ(theta[p][k],
                         std::min(m.cond_mean[p][k] - (n - 1) / n * m.mean_w, 0.0));
      }
    }
    const DesignParams params(theta, 0.0);
    const auto r = feasibility_condition(kappa_vector(m, params), m.mean_w, 0.0,
                                         env.n_players());
    EXPECT_GE(r.slack, 0.0);
  }
}

TEST(PivotRules, ThetaIsZeroWhenEveryTypeIsAboveAverage) {
  const auto env = two_player(4, -1);
  EvaluationCache cache(env.space());
  EXPECT_EQ(theta_for_feasibility(env, cache), (ThetaTable{{0.0}, {0.0}}));
}

TEST(PivotRules, DeficitTypeGetsNegativeTheta) {
  // player 0 type 1 never trades: E[w*|t_0 = 1] = 0 while E[w*] = 1.5
  const auto env = DoubleAuctionEnv({{-5, 4}, {-1}},
                                    Prior::uniform(std::vector<std::size_t>{2, 1}),
                                    DoubleAuction(5));
  EvaluationCache cache(env.space());
  const ThetaTable theta = theta_for_feasibility(env, cache);
  EXPECT_DOUBLE_EQ(theta[0][0], 0.0 - 0.5 * 1.5);
  EXPECT_DOUBLE_EQ(theta[0][1], 0.0);
  EXPECT_DOUBLE_EQ(theta[1][0], 0.0);
}

TEST(Vcg, PaymentExamples) {
  const auto env = two_player(3, -1);
  EvaluationCache cache(env.space());
  const Mechanism mech(env, ConstantPivotRule{{0, 0}, Provenance::kExactSbb});
  const TypeProfile t({0, 0});
  EXPECT_EQ(payment(mech, t, cache), (std::vector<double>{1, -3}));
  const auto outcome = run_protocol(mech, t, t, cache);
  EXPECT_EQ(outcome.utilities, (std::vector<double>{2, 2}));
  EXPECT_EQ(outcome.payments, (std::vector<double>{1, -3}));

  const auto none = two_player(1, -4);
  EvaluationCache cache2(none.space());
  const Mechanism m2(none, ConstantPivotRule{{0.7, -0.2}, Provenance::kLearned});
  EXPECT_EQ(payment(m2, t, cache2), (std::vector<double>{0.7, -0.2}));
  EXPECT_THROW(Mechanism(env, ConstantPivotRule{{0.0}, Provenance::kExactIr}),
               std::invalid_argument);
}

TEST(Vcg, PaymentSumIdentity) {
  Rng rng(14);
  const auto env = generate_double_auction(5, 4, 2);
  EvaluationCache cache(env.space());
  const Mechanism mech(env, ConstantPivotRule{{0.5, -1, 2, 0, 3}, Provenance::kLearned});
  for (int i = 0; i < 500; ++i) {
    const TypeProfile t = env.prior().sample(rng);
    const auto tau = payment(mech, t, cache);
    const double w = w_star(env, t, cache);
    EXPECT_NEAR(std::accumulate(tau.begin(), tau.end(), 0.0), 4.5 - 4 * w, 1e-12);
  }
}

TEST(Vcg, MisreportsNeverHelpInSpotChecks) {
  const auto env = generate_double_auction(3, 4, 66);
  EvaluationCache cache(env.space());
  const Mechanism mech(env, ConstantPivotRule{{1, 2, 3}, Provenance::kLearned});
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const TypeProfile truth = env.prior().sample(rng);
    const auto honest = run_protocol(mech, truth, truth, cache);
    for (std::size_t n = 0; n < 3; ++n) {
      for (TypeIndex k = 0; k < 4; ++k) {
        TypeProfile lie = truth;
        lie[n] = k;
        EXPECT_LE(run_protocol(mech, lie, truth, cache).utilities[n],
                  honest.utilities[n] + kTol);
      }
    }
  }
}

TEST(Dsic, VcgMechanismsPassExhaustiveCheck) {
  Rng rng(55);
  for (int trial = 0; trial < 20; ++trial) {
    const auto env = testing::random_small_auction(rng, 4, 4);
    EvaluationCache cache(env.space());
    const auto m = exact_moments(env, cache);
    const DesignParams params = random_params(env.space(), rng);
    const auto r = feasibility_condition(kappa_vector(m, params), m.mean_w, params.rho(),
                                         env.n_players());
    EXPECT_TRUE(check_dsic(Mechanism(env, pivot_rule_sbb(r, uniform_allocation(r))), cache));
    EXPECT_TRUE(check_dsic(Mechanism(env, pivot_rule_ir(r)), cache));
  }
}

TEST(Dsic, OwnReportInPaymentBreaksIt) {
  const auto env = generate_double_auction(3, 3, 7);
  EvaluationCache cache(env.space());
  const Mechanism mech(env, ConstantPivotRule{{0, 0, 0}, Provenance::kExactSbb});
  auto perturbed = [&](const TypeProfile& t) {
    auto tau = payment(mech, t, cache);
    const auto v = env.values(t);
    for (std::size_t n = 0; n < tau.size(); ++n) tau[n] += static_cast<double>(v[n]);
    return tau;
  };
  EXPECT_FALSE(check_dsic_with(env, perturbed, cache));
}

TEST(Dsic, SingleTypePlayersAreVacuous) {
  const auto env = generate_double_auction(3, 1, 8);
  EvaluationCache cache(env.space());
  EXPECT_TRUE(check_dsic(Mechanism(env, ConstantPivotRule{{5, -5, 0}, Provenance::kLearned}),
                         cache));
}

TEST(Dsic, EnumerationGuard) {
  const auto env = generate_double_auction(8, 8, 1);
  EvaluationCache cache(env.space());
  const Mechanism mech(env, ConstantPivotRule{std::vector<double>(8, 0.0), Provenance::kLearned});
  EXPECT_THROW(check_dsic(mech, cache), EnumerationLimitError);
}

TEST(Properties, ExactAndProfileLevelRevenueAgree) {
  const auto env = generate_double_auction(3, 3, 19);
  EvaluationCache cache(env.space());
  const Mechanism mech(env, ConstantPivotRule{{0.5, 1.5, -0.25}, Provenance::kLearned});
  EXPECT_NEAR(expected_revenue_exact(mech, cache), testing::oracle_revenue(env, mech.pivot().eta),
              kTol);
  const auto oracle = testing::oracle_moments(env);
  EXPECT_NEAR(expected_utility_exact(mech, 1, 2, cache), oracle.cond_mean[1][2] - 1.5, kTol);
  auto constant = [&](std::size_t n, const TypeProfile&) { return mech.eta(n); };
  EXPECT_NEAR(expected_revenue_general(env, constant, cache),
              expected_revenue_exact(mech, cache), kTol);
  EXPECT_NEAR(expected_utility_general(env, constant, 1, 2, cache),
              expected_utility_exact(mech, 1, 2, cache), kTol);
}

TEST(Properties, DependentCounterexampleSatisfiesIrAndWbb) {
  const auto env = dependent_example();
  EvaluationCache cache(env.space());
  // y_nm = (2/3) x_m where m is the common type index; the other player's
  // type identifies it: seller -1 <-> x_1 = 1, seller -2 <-> x_2 = 4.
  auto x_of = [&](const TypeProfile& t) { return w_star(env, t, cache); };
  auto pivot = [&](std::size_t, const TypeProfile& t) { return 2.0 / 3.0 * x_of(t); };
  for (std::size_t n = 0; n < 2; ++n) {
    for (TypeIndex k = 0; k < 2; ++k) {
      EXPECT_GE(expected_utility_general(env, pivot, n, k, cache), -kTol);
    }
  }
  EXPECT_GE(expected_revenue_general(env, pivot, cache), -kTol);
  EXPECT_NEAR(expected_revenue_general(env, pivot, cache), 5.0 / 6.0, kTol);

  const auto m = exact_moments(env, cache);
  const auto r = feasibility_condition(kappa_vector(m, DesignParams::zero(env.space())),
                                       m.mean_w, 0.0, 2);
  EXPECT_EQ(r.slack, -0.5);
  EXPECT_EQ(classify(r, env.prior().kind()), Verdict::kUnknown);
  EXPECT_THROW(expected_utility_general(
                   DoubleAuctionEnv({{2, 6}, {-2, -1}},
                                    Prior::joint({2, 2}, {1.0, 0.0, 0.0, 0.0}),
                                    DoubleAuction(6)),
                   pivot, 0, 1, cache),
               ZeroProbabilityError);
}

TEST(Properties, LinearityUnderJointScaling) {
  Rng rng(90);
  for (int trial = 0; trial < 10; ++trial) {
    const auto base = generate_double_auction(3, 3, rng());
    std::vector<std::vector<TypeValue>> scaled_types = base.type_sets();
    for (auto& row : scaled_types) {
      for (auto& t : row) t *= 3;
    }
    const DoubleAuctionEnv scaled(scaled_types, base.prior(), DoubleAuction(3 * base.value_bound()));
    const DesignParams p = random_params(base.space(), rng);
    ThetaTable theta3 = p.theta();
    for (auto& row : theta3) {
      for (double& x : row) x *= 3;
    }
    const DesignParams p3(theta3, 3 * p.rho());

    EvaluationCache c1(base.space()), c3(scaled.space());
    const auto m1 = exact_moments(base, c1);
    const auto m3 = exact_moments(scaled, c3);
    const auto r1 = feasibility_condition(kappa_vector(m1, p), m1.mean_w, p.rho(), 3);
    const auto r3 = feasibility_condition(kappa_vector(m3, p3), m3.mean_w, p3.rho(), 3);
    EXPECT_NEAR(r3.slack, 3 * r1.slack, 1e-9);
    EXPECT_NEAR(m3.mean_w, 3 * m1.mean_w, 1e-9);
    const auto e1 = pivot_rule_sbb(r1, uniform_allocation(r1));
    const auto e3 = pivot_rule_sbb(r3, uniform_allocation(r3));
    for (std::size_t n = 0; n < 3; ++n) {
      EXPECT_NEAR(r3.kappa[n], 3 * r1.kappa[n], 1e-9);
      EXPECT_NEAR(e3.eta[n], 3 * e1.eta[n], 1e-9);
      for (TypeIndex k = 0; k < 3; ++k) {
        EXPECT_NEAR(expected_utility(m3, e3, n, k), 3 * expected_utility(m1, e1, n, k), 1e-9);
      }
    }
    EXPECT_NEAR(expected_revenue(m3, e3), 3 * expected_revenue(m1, e1), 1e-9);
    const Mechanism mech1(base, e1), mech3(scaled, e3);
    const TypeProfile t({1, 2, 0});
    const auto tau1 = payment(mech1, t, c1), tau3 = payment(mech3, t, c3);
    for (std::size_t n = 0; n < 3; ++n) EXPECT_NEAR(tau3[n], 3 * tau1[n], 1e-9);
  }
}

TEST(MechanismIo, JsonShapeAndRoundTrip) {
  const ConstantPivotRule rule{{1.5, -2.0}, Provenance::kExactIr};
  const DesignParams params({{0.0}, {-1.0, 0.5}}, 0.25);
  const auto j = to_json(rule, params);
  EXPECT_EQ(j.at("provenance"), "exact_ir");
  EXPECT_EQ(j.at("params").at("rho"), 0.25);
  EXPECT_EQ(j.at("params").at("theta")[1][0], -1.0);
  const auto back = pivot_rule_from_json(j);
  EXPECT_EQ(back.eta, rule.eta);
  EXPECT_EQ(back.provenance, rule.provenance);
  auto bad = j;
  bad["provenance"] = "guess";
  EXPECT_THROW(pivot_rule_from_json(bad), std::invalid_argument);
  const auto rj = to_json(feasibility_condition(std::vector<double>{1, 1}, 2.5, 0.0, 2));
  EXPECT_EQ(rj.at("slack"), -0.5);
  EXPECT_EQ(rj.at("feasible_by_condition"), false);
}

}  // namespace
}  // namespace vcgpac
