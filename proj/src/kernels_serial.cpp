/*******************************************************************************
 * Copyright (c) 2026 The qaoa-density authors.                                *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "qaoa/kernels.hpp"

#include <cmath>

namespace qaoa::kernels::serial {

void build_cost(int n, std::span<const Edge> edges, std::span<std::int32_t> values) {
  const std::uint64_t dim = std::uint64_t{1} << n;
  for (std::uint64_t z = 0; z < dim; ++z) {
    std::int32_t acc = 0;
    for (const Edge &e : edges) {
      const int si = ((z >> e.i) & 1) ? -1 : 1;
      const int sj = ((z >> e.j) & 1) ? -1 : 1;
      acc += e.w * si * sj;
    }
    values[z] = acc;
  }
}

void cost_phase(std::span<cplx> amps, std::span<const std::int32_t> values, double gamma) {
  for (std::size_t z = 0; z < amps.size(); ++z)
    amps[z] *= std::polar(1.0, -gamma * values[z]);
}

void mixer(std::span<cplx> amps, int n, double beta) {
  const double c = std::cos(beta);
  const cplx mis(0.0, -std::sin(beta)); // -i sin(beta)
  for (int q = 0; q < n; ++q) {
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t z = 0; z < amps.size(); ++z) {
      if (z & bit)
        continue;
      const cplx a0 = amps[z];
      const cplx a1 = amps[z | bit];
      amps[z] = c * a0 + mis * a1;
      amps[z | bit] = mis * a0 + c * a1;
    }
  }
}

void layer(std::span<cplx> amps, int n, std::span<const std::int32_t> values, double gamma,
           double beta) {
  cost_phase(amps, values, gamma);
  mixer(amps, n, beta);
}

double expectation(std::span<const cplx> amps, std::span<const std::int32_t> values) {
  double acc = 0.0;
  for (std::size_t z = 0; z < amps.size(); ++z)
    acc += std::norm(amps[z]) * values[z];
  return acc;
}

double probability_mass(std::span<const cplx> amps, std::span<const std::uint64_t> indices) {
  double acc = 0.0;
  for (std::uint64_t z : indices)
    acc += std::norm(amps[z]);
  return acc;
}

double norm_squared(std::span<const cplx> amps) {
  double acc = 0.0;
  for (const cplx &a : amps)
    acc += std::norm(a);
  return acc;
}

} // namespace qaoa::kernels::serial
