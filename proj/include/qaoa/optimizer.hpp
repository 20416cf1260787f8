/*******************************************************************************
 * Copyright (c) 2026 The qaoa-density authors.                                *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include "qaoa/cost.hpp"
#include "qaoa/state.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace qaoa {

struct OptimizerConfig {
  int starts = 50;
  /// Objective evaluations allowed per start; 0 means 200 x (2p).
  int max_evals = 0;
  double xtol = 1e-4;
  double ftol = 1e-6;
  std::uint64_t seed = 0;
  /// Initial simplex edge as a fraction of each coordinate's box width.
  double simplex_scale = 0.1;

  /// Default restart policy: 50 starts at p = 3, 20 p otherwise.
  static OptimizerConfig for_depth(int p, std::uint64_t seed = 0);
  static int default_starts(int p) { return p == 3 ? 50 : 20 * p; }

  int evals_per_start(int p) const { return max_evals > 0 ? max_evals : 200 * 2 * p; }
  void validate() const;
};

struct OptimResult {
  ParamVector best_params;
  double best_value = 0.0;
  long evals_used = 0;
  /// Set when at least one start stopped on its evaluation budget.
  bool budget_exhausted = false;
  int starts = 0;
  std::vector<double> start_values;
};

struct NelderMeadResult {
  std::vector<double> x;
  double fx = 0.0;
  int evals = 0;
  bool budget_exhausted = false;
};

using Objective = std::function<double(std::span<const double>)>;

/// Unconstrained Nelder-Mead with standard coefficients (1, 2, 1/2, 1/2).
/// The initial simplex is x0 plus x0 + step[i] e_i. Stops once every vertex
/// is within xtol (max-norm) and ftol of the best, or after max_evals calls.
NelderMeadResult nelder_mead(const Objective &f, std::vector<double> x0,
                             std::span<const double> step, int max_evals, double xtol,
                             double ftol);

/// Multi-start minimisation of <C> over gamma in [0, pi)^p, beta in [0, 2 pi)^p.
/// Angles are wrapped periodically before every evaluation. Start k draws its
/// initial point from a stream seeded by (cfg.seed, k), so results are
/// deterministic and a run with more starts extends one with fewer.
OptimResult optimize(const DiagonalCost &c, int p, const OptimizerConfig &cfg);

/// As optimize(), but start 0 begins at init; starts 1.. are random as above.
OptimResult optimize_warmstart(const DiagonalCost &c, int p, const ParamVector &init,
                               const OptimizerConfig &cfg);

} // namespace qaoa
