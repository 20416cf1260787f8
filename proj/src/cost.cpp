/*******************************************************************************
 * Copyright (c) 2026 The qaoa-density authors.                                *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "qaoa/cost.hpp"

#include "qaoa/common.hpp"
#include "qaoa/kernels.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace qaoa {

void check_capacity(int n) {
  if (n < 1 || n > kMaxQubits)
    throw CapacityError("qubit count " + std::to_string(n) + " outside [1, " +
                        std::to_string(kMaxQubits) + "]");
}

DiagonalCost build_cost(const Graph &g) {
  check_capacity(g.n);
  validate(g);
  DiagonalCost c;
  c.n = g.n;
  c.num_edges = g.num_edges();
  c.values.resize(std::size_t{1} << g.n);
  kernels::omp::build_cost(g.n, g.edges, c.values);
  const auto [lo, hi] = std::minmax_element(c.values.begin(), c.values.end());
  c.min_value = *lo;
  c.max_value = *hi;
  return c;
}

GroundSet ground(const DiagonalCost &c) {
  GroundSet gs;
  gs.n = c.n;
  const std::int64_t dim = static_cast<std::int64_t>(c.values.size());
  std::int32_t lo = std::numeric_limits<std::int32_t>::max();
#pragma omp parallel for reduction(min : lo) schedule(static) if (dim >= (1 << 16))
  for (std::int64_t z = 0; z < dim; ++z)
    lo = std::min(lo, c.values[static_cast<std::size_t>(z)]);
  gs.c_min = dim > 0 ? lo : 0;
  for (std::int64_t z = 0; z < dim; ++z)
    if (c.values[static_cast<std::size_t>(z)] == gs.c_min)
      gs.indices.push_back(static_cast<std::uint64_t>(z));
  return gs;
}

} // namespace qaoa
