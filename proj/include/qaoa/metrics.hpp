/*******************************************************************************
 * Copyright (c) 2026 The qaoa-density authors.                                *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include "qaoa/cost.hpp"
#include "qaoa/optimizer.hpp"

#include <cstdint>

namespace qaoa {

/// Performance of one optimised ansatz on one instance.
///   f   = <C>* - C_min        best-approximation error (>= 0)
///   eta = sum_gs |<gs|psi*>|^2 success probability
///   r   = <C>* / C_min        approximation ratio (1 when C_min = 0)
struct MetricSet {
  double f = 0.0;
  double eta = 0.0;
  double r = 1.0;
  std::int32_t c_min = 0;
  double expect_opt = 0.0;
  std::int64_t degeneracy = 0;
};

/// eta is evaluated at params_for_eta, which callers set to opt.best_params.
MetricSet compute_metrics(const DiagonalCost &c, const GroundSet &gs, const OptimResult &opt,
                          const ParamVector &params_for_eta);

} // namespace qaoa
