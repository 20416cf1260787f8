/*******************************************************************************
 * Copyright (c) 2026 The qaoa-density authors.                                *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "dense_oracle.hpp"

#include "qaoa/cost.hpp"
#include "qaoa/metrics.hpp"
#include "qaoa/optimizer.hpp"
#include "qaoa/sweep.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace qaoa;

namespace {

Graph single_edge() { return Graph{2, {{0, 1, 1}}, Family::uniform, 0}; }

struct ScanResult {
  double value;
  ParamVector at;
};

// p = 1 landscape on a 400 x 400 grid over the box, evaluated with dense
// matrices.
ScanResult grid_scan(const Graph &g) {
  constexpr int kRes = 400;
  const oracle::Mat hx = oracle::driver_hamiltonian(g.n);
  const oracle::Mat hc = oracle::problem_hamiltonian(g);
  const oracle::Vec plus = oracle::plus_state(g.n);
  ScanResult best{std::numeric_limits<double>::infinity(), {}};
  std::vector<oracle::Vec> phased;
  for (int a = 0; a < kRes; ++a) {
    const double gamma = a * std::numbers::pi / kRes;
    phased.push_back(oracle::expm_hermitian(hc, gamma) * plus);
  }
  for (int b = 0; b < kRes; ++b) {
    const double beta = b * 2 * std::numbers::pi / kRes;
    const oracle::Mat ux = oracle::expm_hermitian(hx, beta);
    for (int a = 0; a < kRes; ++a) {
      const oracle::Vec psi = ux * phased[static_cast<std::size_t>(a)];
      const double e = (psi.adjoint() * hc * psi)(0, 0).real();
      if (e < best.value)
        best = {e, ParamVector{{a * std::numbers::pi / kRes}, {beta}}};
    }
  }
  return best;
}

OptimizerConfig small_config(int starts, std::uint64_t seed) {
  OptimizerConfig cfg;
  cfg.starts = starts;
  cfg.seed = seed;
  return cfg;
}

} // namespace

TEST(NelderMead, Quadratic) {
  const Objective f = [](std::span<const double> x) {
    return (x[0] - 1) * (x[0] - 1) + 4 * (x[1] + 2) * (x[1] + 2);
  };
  const std::vector<double> step{0.5, 0.5};
  const NelderMeadResult r = nelder_mead(f, {0.0, 0.0}, step, 2000, 1e-8, 1e-14);
  EXPECT_FALSE(r.budget_exhausted);
  EXPECT_NEAR(r.x[0], 1.0, 1e-6);
  EXPECT_NEAR(r.x[1], -2.0, 1e-6);
}

TEST(NelderMead, RosenbrockAndBudget) {
  const Objective f = [](std::span<const double> x) {
    return 100 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1 - x[0], 2);
  };
  const std::vector<double> step{0.1, 0.1};
  const NelderMeadResult r = nelder_mead(f, {-1.2, 1.0}, step, 5000, 1e-9, 1e-15);
  EXPECT_NEAR(r.x[0], 1.0, 1e-4);
  EXPECT_NEAR(r.x[1], 1.0, 1e-4);

  const NelderMeadResult cut = nelder_mead(f, {-1.2, 1.0}, step, 10, 1e-9, 1e-15);
  EXPECT_TRUE(cut.budget_exhausted);
  EXPECT_EQ(cut.evals, 10);
}

TEST(OptimizerConfig, Defaults) {
  EXPECT_EQ(OptimizerConfig::default_starts(3), 50);
  EXPECT_EQ(OptimizerConfig::default_starts(6), 120);
  EXPECT_EQ(OptimizerConfig::for_depth(1).starts, 20);
  EXPECT_EQ(OptimizerConfig{}.evals_per_start(3), 1200);
  OptimizerConfig bad;
  bad.starts = 0;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad.starts = 1;
  bad.xtol = 0;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(Optimize, EmptyGraphIsZero) {
  const DiagonalCost c = build_cost(Graph{5, {}, Family::uniform, 0});
  for (int p : {1, 2, 3}) {
    const OptimResult r = optimize(c, p, small_config(4, 1));
    EXPECT_EQ(r.best_value, 0.0);
  }
}

TEST(Optimize, SingleEdgeDepthOneIsExact) {
  const ScanResult scan = grid_scan(single_edge());
  EXPECT_NEAR(scan.value, -1.0, 1e-12);
  const OptimResult r = optimize(build_cost(single_edge()), 1, OptimizerConfig::for_depth(1, 3));
  EXPECT_NEAR(r.best_value, scan.value, 1e-3);
  EXPECT_TRUE(r.best_params.in_box());
}

TEST(Optimize, BestIsMinimumOfStartsAndAboveGround) {
  for (std::uint64_t s = 0; s < 4; ++s) {
    const DiagonalCost c = build_cost(gen_gnm(8, 14, s));
    const OptimResult r = optimize(c, 2, small_config(6, s));
    ASSERT_EQ(r.start_values.size(), 6u);
    EXPECT_EQ(r.best_value, *std::min_element(r.start_values.begin(), r.start_values.end()));
    EXPECT_GE(r.best_value, ground(c).c_min);
    EXPECT_LE(r.best_value, 0.0);
    EXPECT_EQ(r.starts, 6);
    std::vector<cplx> scratch;
    EXPECT_EQ(ansatz_expectation(c, r.best_params, scratch), r.best_value);
  }
}

TEST(Optimize, MoreStartsNeverWorse) {
  const DiagonalCost c = build_cost(gen_gnm(9, 14, 21));
  const OptimResult few = optimize(c, 2, small_config(3, 7));
  const OptimResult many = optimize(c, 2, small_config(12, 7));
  EXPECT_LE(many.best_value, few.best_value);
  for (std::size_t s = 0; s < few.start_values.size(); ++s)
    EXPECT_EQ(few.start_values[s], many.start_values[s]);
}

TEST(Optimize, Deterministic) {
  const DiagonalCost c = build_cost(gen_gnm(9, 14, 22));
  const OptimResult a = optimize(c, 2, small_config(5, 9));
  const OptimResult b = optimize(c, 2, small_config(5, 9));
  EXPECT_EQ(a.best_value, b.best_value);
  EXPECT_EQ(a.best_params, b.best_params);
  EXPECT_EQ(a.start_values, b.start_values);
  EXPECT_EQ(a.evals_used, b.evals_used);
}

TEST(Optimize, BudgetIsReported) {
  const DiagonalCost c = build_cost(gen_gnm(8, 14, 2));
  OptimizerConfig cfg = small_config(2, 1);
  cfg.max_evals = 5;
  const OptimResult r = optimize(c, 3, cfg);
  EXPECT_TRUE(r.budget_exhausted);
  EXPECT_EQ(r.evals_used, 10);
}

TEST(Optimize, LowDensityIsNearlySolved) {
  // n = 10, m = 3 (density 0.3), depth 3, 20 seeded instances.
  int close = 0;
  double eta_sum = 0;
  for (int inst = 0; inst < 20; ++inst) {
    const std::uint64_t seed = graph_seed(1, Family::uniform, 10, 3, inst);
    const DiagonalCost c = build_cost(gen_gnm(10, 3, seed));
    const GroundSet gs = ground(c);
    const OptimResult r = optimize(c, 3, OptimizerConfig::for_depth(3, seed));
    close += std::abs(r.best_value - gs.c_min) <= 0.05 * std::abs(gs.c_min);
    eta_sum += compute_metrics(c, gs, r, r.best_params).eta;
  }
  EXPECT_GE(close, 18);
  EXPECT_GT(eta_sum / 20, 0.9);
}

TEST(WarmStart, FromZeroNeverPositive) {
  const DiagonalCost c = build_cost(gen_gnm(8, 20, 5));
  const OptimizerConfig cfg = small_config(1, 0);
  const OptimResult r = optimize_warmstart(c, 2, ParamVector::zeros(2), cfg);
  EXPECT_LE(r.best_value, 0.0 + cfg.ftol);
}

TEST(WarmStart, PaddedOptimumNeverWorse) {
  const DiagonalCost c = build_cost(gen_gnm(9, 16, 6));
  OptimizerConfig cfg = small_config(4, 2);
  const OptimResult p2 = optimize(c, 2, cfg);
  const OptimResult p3 = optimize_warmstart(c, 3, p2.best_params.padded(3), cfg);
  EXPECT_LE(p3.best_value, p2.best_value + cfg.ftol);
}

TEST(WarmStart, KnownOptimumIsKept) {
  const ScanResult scan = grid_scan(single_edge());
  OptimizerConfig cfg = small_config(1, 0);
  const OptimResult r = optimize_warmstart(build_cost(single_edge()), 1, scan.at, cfg);
  EXPECT_NEAR(r.best_params.gammas[0], scan.at.gammas[0], cfg.xtol);
  EXPECT_NEAR(r.best_params.betas[0], scan.at.betas[0], cfg.xtol);
  EXPECT_NEAR(r.best_value, -1.0, 1e-12);
}

TEST(WarmStart, DepthMismatch) {
  const DiagonalCost c = build_cost(single_edge());
  EXPECT_THROW(optimize_warmstart(c, 2, ParamVector::zeros(1), small_config(1, 0)),
               std::invalid_argument);
  EXPECT_THROW(optimize(c, 0, small_config(1, 0)), std::invalid_argument);
}
