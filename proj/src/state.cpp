/*******************************************************************************
 * Copyright (c) 2026 The qaoa-density authors.                                *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "qaoa/state.hpp"

#include "qaoa/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qaoa {

namespace {

double wrap(double x, double period) {
  double r = std::fmod(x, period);
  if (r < 0.0)
    r += period;
  // fmod of a tiny negative number can round up to exactly `period`.
  if (r >= period)
    r = 0.0;
  return r;
}

void require_same_dim(const StateVector &s, int n, const char *what) {
  if (s.num_qubits() != n)
    throw std::invalid_argument(std::string(what) + ": state has " +
                                std::to_string(s.num_qubits()) + " qubits, operand has " +
                                std::to_string(n));
}

void require_params(const ParamVector &p) {
  if (p.gammas.size() != p.betas.size())
    throw std::invalid_argument("ansatz: gamma and beta counts differ");
  for (std::size_t k = 0; k < p.gammas.size(); ++k)
    if (!std::isfinite(p.gammas[k]) || !std::isfinite(p.betas[k]))
      throw std::invalid_argument("ansatz: non-finite angle");
}

} // namespace

ParamVector ParamVector::zeros(int p) {
  if (p < 0)
    throw std::invalid_argument("ParamVector: negative depth");
  return ParamVector{std::vector<double>(static_cast<std::size_t>(p), 0.0),
                     std::vector<double>(static_cast<std::size_t>(p), 0.0)};
}

ParamVector ParamVector::from_flat(std::span<const double> flat) {
  if (flat.size() % 2 != 0)
    throw std::invalid_argument("ParamVector: flat vector must have even length");
  const std::size_t p = flat.size() / 2;
  return ParamVector{{flat.begin(), flat.begin() + static_cast<std::ptrdiff_t>(p)},
                     {flat.begin() + static_cast<std::ptrdiff_t>(p), flat.end()}};
}

std::vector<double> ParamVector::flat() const {
  std::vector<double> out(gammas);
  out.insert(out.end(), betas.begin(), betas.end());
  return out;
}

bool ParamVector::in_box() const {
  if (gammas.size() != betas.size())
    return false;
  for (double g : gammas)
    if (!(g >= 0.0 && g < kGammaPeriod))
      return false;
  for (double b : betas)
    if (!(b >= 0.0 && b < kBetaPeriod))
      return false;
  return true;
}

ParamVector ParamVector::wrapped() const {
  ParamVector out = *this;
  for (double &g : out.gammas)
    g = wrap(g, kGammaPeriod);
  for (double &b : out.betas)
    b = wrap(b, kBetaPeriod);
  return out;
}

ParamVector ParamVector::padded(int p) const {
  if (p < depth())
    throw std::invalid_argument("ParamVector: cannot pad to a smaller depth");
  ParamVector out = *this;
  out.gammas.resize(static_cast<std::size_t>(p), 0.0);
  out.betas.resize(static_cast<std::size_t>(p), 0.0);
  return out;
}

StateVector::StateVector(int n) : n_(n) {
  check_capacity(n);
  amps_.assign(std::size_t{1} << n, cplx{});
  amps_[0] = 1.0;
}

StateVector::StateVector(int n, std::vector<cplx> amps) : n_(n), amps_(std::move(amps)) {
  check_capacity(n);
  if (amps_.size() != (std::size_t{1} << n))
    throw std::invalid_argument("StateVector: amplitude count must be 2^n");
}

StateVector StateVector::basis(int n, std::uint64_t z) {
  StateVector s(n);
  if (z >= s.dim())
    throw std::invalid_argument("StateVector::basis: index out of range");
  s.amps_[0] = 0.0;
  s.amps_[z] = 1.0;
  return s;
}

double StateVector::norm() const { return std::sqrt(kernels::omp::norm_squared(amps_)); }

StateVector init_plus(int n) {
  check_capacity(n);
  const double a = std::pow(2.0, -0.5 * n);
  return StateVector(n, std::vector<cplx>(std::size_t{1} << n, cplx(a, 0.0)));
}

void apply_cost_phase(StateVector &s, double gamma, const DiagonalCost &c) {
  require_same_dim(s, c.n, "apply_cost_phase");
  kernels::omp::cost_phase(s.amps(), c.values, c.num_edges, gamma);
}

void apply_mixer(StateVector &s, double beta) {
  kernels::omp::mixer(s.amps(), s.num_qubits(), beta);
}

void ansatz_into(StateVector &out, const DiagonalCost &c, const ParamVector &params) {
  require_params(params);
  check_capacity(c.n);
  if (out.num_qubits() != c.n)
    out = init_plus(c.n);
  else
    std::fill(out.amps().begin(), out.amps().end(), cplx(std::pow(2.0, -0.5 * c.n), 0.0));
  for (int k = 0; k < params.depth(); ++k)
    kernels::omp::layer(out.amps(), c.n, c.values, c.num_edges, params.gammas[k],
                        params.betas[k]);
}

StateVector ansatz(const DiagonalCost &c, const ParamVector &params) {
  StateVector s;
  ansatz_into(s, c, params);
  return s;
}

double ansatz_expectation(const DiagonalCost &c, const ParamVector &params,
                          std::vector<cplx> &scratch) {
  require_params(params);
  check_capacity(c.n);
  const std::size_t half = std::size_t{1} << (c.n - 1);
  scratch.assign(half, cplx(std::pow(2.0, -0.5 * c.n), 0.0));
  for (int k = 0; k < params.depth(); ++k)
    kernels::omp::layer_symmetric(scratch, c.n, c.values, c.num_edges, params.gammas[k],
                                  params.betas[k]);
  const double e = 2.0 * kernels::omp::expectation(
                             scratch, std::span<const std::int32_t>(c.values).first(half));
  return std::clamp(e, static_cast<double>(c.min_value), static_cast<double>(c.max_value));
}

double expectation(const StateVector &s, const DiagonalCost &c) {
  require_same_dim(s, c.n, "expectation");
  // Rounding can push a converged value a few ulps past the spectrum edge.
  const double e = kernels::omp::expectation(s.amps(), c.values);
  return std::clamp(e, static_cast<double>(c.min_value), static_cast<double>(c.max_value));
}

double overlap(const StateVector &s, const GroundSet &gs) {
  require_same_dim(s, gs.n, "overlap");
  return std::clamp(kernels::omp::probability_mass(s.amps(), gs.indices), 0.0, 1.0);
}

} // namespace qaoa
