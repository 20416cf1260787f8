/*******************************************************************************
 * Copyright (c) 2026 The qaoa-density authors.                                *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "qaoa/optimizer.hpp"

#include "qaoa/rng.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace qaoa {

OptimizerConfig OptimizerConfig::for_depth(int p, std::uint64_t seed) {
  OptimizerConfig cfg;
  cfg.starts = default_starts(p);
  cfg.seed = seed;
  return cfg;
}

void OptimizerConfig::validate() const {
  if (starts < 1)
    throw std::invalid_argument("optimizer: starts must be at least 1");
  if (max_evals < 0)
    throw std::invalid_argument("optimizer: max_evals must be nonnegative");
  if (!(xtol > 0.0) || !(ftol > 0.0))
    throw std::invalid_argument("optimizer: tolerances must be positive");
  if (!(simplex_scale > 0.0))
    throw std::invalid_argument("optimizer: simplex_scale must be positive");
}

NelderMeadResult nelder_mead(const Objective &f, std::vector<double> x0,
                             std::span<const double> step, int max_evals, double xtol,
                             double ftol) {
  constexpr double kReflect = 1.0, kExpand = 2.0, kContract = 0.5, kShrink = 0.5;
  const std::size_t dim = x0.size();
  if (step.size() != dim)
    throw std::invalid_argument("nelder_mead: step size mismatch");

  NelderMeadResult res;
  std::vector<std::vector<double>> x(dim + 1, x0);
  std::vector<double> fx(dim + 1, std::numeric_limits<double>::infinity());
  res.x = x0;
  res.fx = std::numeric_limits<double>::infinity();

  auto eval = [&](const std::vector<double> &pt) {
    const double v = f(pt);
    ++res.evals;
    if (v < res.fx) {
      res.fx = v;
      res.x = pt;
    }
    return v;
  };
  auto out_of_budget = [&] { return res.evals >= max_evals; };

  for (std::size_t i = 0; i < dim; ++i)
    x[i + 1][i] += step[i];
  for (std::size_t v = 0; v <= dim; ++v) {
    fx[v] = eval(x[v]);
    if (out_of_budget()) {
      res.budget_exhausted = true;
      return res;
    }
  }

  std::vector<std::size_t> order(dim + 1);
  std::vector<double> centroid(dim), xr(dim), xe(dim), xc(dim);
  for (;;) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return fx[a] < fx[b]; });
    const std::size_t best = order.front(), worst = order.back(), second = order[dim - 1];

    double fspread = 0.0, xspread = 0.0;
    for (std::size_t v = 0; v <= dim; ++v) {
      fspread = std::max(fspread, std::abs(fx[v] - fx[best]));
      for (std::size_t i = 0; i < dim; ++i)
        xspread = std::max(xspread, std::abs(x[v][i] - x[best][i]));
    }
    if (fspread <= ftol && xspread <= xtol)
      return res;
    if (out_of_budget()) {
      res.budget_exhausted = true;
      return res;
    }

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t k = 0; k < dim; ++k)
      for (std::size_t i = 0; i < dim; ++i)
        centroid[i] += x[order[k]][i];
    for (double &ci : centroid)
      ci /= static_cast<double>(dim);

    for (std::size_t i = 0; i < dim; ++i)
      xr[i] = centroid[i] + kReflect * (centroid[i] - x[worst][i]);
    const double fr = eval(xr);

    if (fr < fx[best]) {
      for (std::size_t i = 0; i < dim; ++i)
        xe[i] = centroid[i] + kExpand * (xr[i] - centroid[i]);
      const double fe = out_of_budget() ? std::numeric_limits<double>::infinity() : eval(xe);
      if (fe < fr) {
        x[worst] = xe;
        fx[worst] = fe;
      } else {
        x[worst] = xr;
        fx[worst] = fr;
      }
      continue;
    }
    if (fr < fx[second]) {
      x[worst] = xr;
      fx[worst] = fr;
      continue;
    }
    if (out_of_budget())
      continue;

    const bool outside = fr < fx[worst];
    const std::vector<double> &toward = outside ? xr : x[worst];
    for (std::size_t i = 0; i < dim; ++i)
      xc[i] = centroid[i] + kContract * (toward[i] - centroid[i]);
    const double fc = eval(xc);
    if (outside ? fc <= fr : fc < fx[worst]) {
      x[worst] = xc;
      fx[worst] = fc;
      continue;
    }

    for (std::size_t v = 0; v <= dim; ++v) {
      if (v == best)
        continue;
      for (std::size_t i = 0; i < dim; ++i)
        x[v][i] = x[best][i] + kShrink * (x[v][i] - x[best][i]);
      fx[v] = eval(x[v]);
      if (out_of_budget())
        break;
    }
  }
}

namespace {

std::vector<double> random_start(int p, std::uint64_t seed, int start) {
  SplitMix64 rng(derive_seed(seed, {static_cast<std::uint64_t>(start)}));
  std::vector<double> x(static_cast<std::size_t>(2 * p));
  for (int k = 0; k < p; ++k)
    x[static_cast<std::size_t>(k)] = rng.uniform() * kGammaPeriod;
  for (int k = 0; k < p; ++k)
    x[static_cast<std::size_t>(p + k)] = rng.uniform() * kBetaPeriod;
  return x;
}

OptimResult run_starts(const DiagonalCost &c, int p, const OptimizerConfig &cfg,
                       const ParamVector *init) {
  cfg.validate();
  if (p < 1)
    throw std::invalid_argument("optimize: depth must be at least 1");
  check_capacity(c.n);

  std::vector<double> step(static_cast<std::size_t>(2 * p));
  for (int k = 0; k < p; ++k) {
    step[static_cast<std::size_t>(k)] = cfg.simplex_scale * kGammaPeriod;
    step[static_cast<std::size_t>(p + k)] = cfg.simplex_scale * kBetaPeriod;
  }
  const int budget = cfg.evals_per_start(p);

  std::vector<NelderMeadResult> runs(static_cast<std::size_t>(cfg.starts));
  // Starts are independent; the reduction below is order-fixed, so the result
  // does not depend on how the starts are scheduled.
#pragma omp parallel for schedule(dynamic, 1) if (cfg.starts > 1 && !omp_in_parallel())
  for (int s = 0; s < cfg.starts; ++s) {
    std::vector<cplx> scratch;
    Objective objective = [&](std::span<const double> flat) {
      return ansatz_expectation(c, ParamVector::from_flat(flat).wrapped(), scratch);
    };
    std::vector<double> x0 = (s == 0 && init) ? init->wrapped().flat() : random_start(p, cfg.seed, s);
    runs[static_cast<std::size_t>(s)] =
        nelder_mead(objective, std::move(x0), step, budget, cfg.xtol, cfg.ftol);
  }

  OptimResult out;
  out.starts = cfg.starts;
  std::size_t best = 0;
  for (std::size_t s = 0; s < runs.size(); ++s) {
    out.start_values.push_back(runs[s].fx);
    out.evals_used += runs[s].evals;
    out.budget_exhausted = out.budget_exhausted || runs[s].budget_exhausted;
    if (runs[s].fx < runs[best].fx)
      best = s;
  }
  out.best_value = runs[best].fx;
  out.best_params = ParamVector::from_flat(runs[best].x).wrapped();
  return out;
}

} // namespace

OptimResult optimize(const DiagonalCost &c, int p, const OptimizerConfig &cfg) {
  return run_starts(c, p, cfg, nullptr);
}

OptimResult optimize_warmstart(const DiagonalCost &c, int p, const ParamVector &init,
                               const OptimizerConfig &cfg) {
  if (init.depth() != p || init.betas.size() != init.gammas.size())
    throw std::invalid_argument("optimize_warmstart: initial parameters must have depth p");
  return run_starts(c, p, cfg, &init);
}

} // namespace qaoa
