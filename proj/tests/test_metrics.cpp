/*******************************************************************************
 * Copyright (c) 2026 The qaoa-density authors.                                *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "qaoa/cost.hpp"
#include "qaoa/metrics.hpp"
#include "qaoa/optimizer.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace qaoa;

TEST(Metrics, EmptyGraph) {
  const DiagonalCost c = build_cost(Graph{4, {}, Family::uniform, 0});
  const GroundSet gs = ground(c);
  OptimizerConfig cfg;
  cfg.starts = 2;
  const OptimResult opt = optimize(c, 1, cfg);
  const MetricSet m = compute_metrics(c, gs, opt, opt.best_params);
  EXPECT_EQ(m.f, 0.0);
  EXPECT_NEAR(m.eta, 1.0, 1e-15);
  EXPECT_EQ(m.r, 1.0);
  EXPECT_EQ(m.degeneracy, 16);
}

TEST(Metrics, SingleEdgeSolvedAtDepthOne) {
  const DiagonalCost c = build_cost(Graph{2, {{0, 1, 1}}, Family::uniform, 0});
  const GroundSet gs = ground(c);
  const OptimResult opt = optimize(c, 1, OptimizerConfig::for_depth(1, 4));
  const MetricSet m = compute_metrics(c, gs, opt, opt.best_params);
  EXPECT_LE(m.f, 1e-3);
  EXPECT_GE(m.f, 0.0);
  EXPECT_NEAR(m.eta, 1.0, 1e-3);
  EXPECT_NEAR(m.r, 1.0, 1e-3);
  EXPECT_EQ(m.c_min, -1);
  EXPECT_EQ(m.degeneracy, 2);
}

TEST(Metrics, ZeroParamsGiveUniformOverlap) {
  const DiagonalCost c = build_cost(gen_gnm(10, 18, 3));
  const GroundSet gs = ground(c);
  OptimResult opt;
  opt.best_params = ParamVector::zeros(2);
  opt.best_value = 0.0;
  const MetricSet m = compute_metrics(c, gs, opt, opt.best_params);
  EXPECT_EQ(m.eta, std::ldexp(static_cast<double>(gs.degeneracy()), -10));
  EXPECT_EQ(m.f, -static_cast<double>(gs.c_min));
  EXPECT_EQ(m.r, 0.0);
}

TEST(Metrics, InvariantsOnOptimizedRuns) {
  for (std::uint64_t s = 0; s < 6; ++s) {
    const DiagonalCost c = build_cost(gen_gnm(8, 4 + 3 * static_cast<int>(s), s));
    const GroundSet gs = ground(c);
    OptimizerConfig cfg;
    cfg.starts = 4;
    cfg.seed = s;
    const OptimResult opt = optimize(c, 2, cfg);
    const MetricSet m = compute_metrics(c, gs, opt, opt.best_params);
    EXPECT_GE(m.f, 0.0);
    EXPECT_EQ(m.f, m.expect_opt - m.c_min);
    EXPECT_GE(m.eta, 0.0);
    EXPECT_LE(m.eta, 1.0);
    EXPECT_LE(m.expect_opt, 0.0);
    EXPECT_LE(m.r, 1.0);
    EXPECT_GE(m.r, 0.0);
    EXPECT_DOUBLE_EQ(m.r, 1.0 - m.f / std::abs(m.c_min));
  }
}
