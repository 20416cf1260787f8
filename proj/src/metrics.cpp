/*******************************************************************************
 * Copyright (c) 2026 The qaoa-density authors.                                *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "qaoa/metrics.hpp"

namespace qaoa {

MetricSet compute_metrics(const DiagonalCost &c, const GroundSet &gs, const OptimResult &opt,
                          const ParamVector &params_for_eta) {
  MetricSet m;
  m.c_min = gs.c_min;
  m.degeneracy = static_cast<std::int64_t>(gs.degeneracy());
  m.expect_opt = opt.best_value;
  m.f = opt.best_value - gs.c_min;
  m.r = gs.c_min != 0 ? opt.best_value / gs.c_min : 1.0;
  m.eta = overlap(ansatz(c, params_for_eta), gs);
  return m;
}

} // namespace qaoa
