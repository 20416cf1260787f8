/*******************************************************************************
 * Copyright (c) 2026 The qaoa-density authors.                                *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include "qaoa/graph.hpp"

#include <cstdint>
#include <vector>

namespace qaoa {

/// Diagonal of C = sum_{(i,j)} w_ij Z_i Z_j over all 2^n assignments.
///
/// Bit convention (shared by every module): bit i of the basis index z is
/// node i, least significant first. Spin s_i(z) = +1 when the bit is 0 and -1
/// when it is 1, so values[z] = sum w_ij s_i(z) s_j(z).
struct DiagonalCost {
  int n = 0;
  int num_edges = 0;
  std::int32_t min_value = 0;
  std::int32_t max_value = 0;
  std::vector<std::int32_t> values;

  std::size_t dim() const { return values.size(); }
};

/// Exact minimum of the cost and every index attaining it (sorted ascending).
struct GroundSet {
  int n = 0;
  std::int32_t c_min = 0;
  std::vector<std::uint64_t> indices;

  std::size_t degeneracy() const { return indices.size(); }
};

/// Throws CapacityError when g.n exceeds kMaxQubits.
DiagonalCost build_cost(const Graph &g);

GroundSet ground(const DiagonalCost &c);

} // namespace qaoa
