/*******************************************************************************
 * Copyright (c) 2026 The qaoa-density authors.                                *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
// The OpenMP kernels against the serial reference.

#include "qaoa/cost.hpp"
#include "qaoa/kernels.hpp"
#include "qaoa/rng.hpp"

#include <gtest/gtest.h>
#include <omp.h>

#include <cmath>
#include <cstring>

using namespace qaoa;

namespace {

std::vector<cplx> random_state(int n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<cplx> v(std::size_t{1} << n);
  double norm = 0.0;
  for (cplx &a : v) {
    a = {rng.uniform() - 0.5, rng.uniform() - 0.5};
    norm += std::norm(a);
  }
  for (cplx &a : v)
    a /= std::sqrt(norm);
  return v;
}

std::vector<cplx> symmetric_state(int n, std::uint64_t seed) {
  std::vector<cplx> v = random_state(n, seed);
  const std::size_t mask = v.size() - 1;
  for (std::size_t z = 0; z < v.size() / 2; ++z)
    v[z ^ mask] = v[z];
  return v;
}

double max_diff(const std::vector<cplx> &a, const std::vector<cplx> &b) {
  double d = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k)
    d = std::max(d, std::abs(a[k] - b[k]));
  return d;
}

struct Case {
  Graph g;
  DiagonalCost c;
};

Case make_case(int n, std::uint64_t seed) {
  const int max_m = n * (n - 1) / 2;
  Graph g = n >= 2 ? gen_gnm(n, std::min(max_m, 2 * n), seed) : Graph{1, {}, Family::uniform, 0};
  DiagonalCost c = build_cost(g);
  return {std::move(g), std::move(c)};
}

class KernelSizes : public ::testing::TestWithParam<int> {};

} // namespace

TEST_P(KernelSizes, CostPhaseMatchesSerial) {
  const int n = GetParam();
  const Case k = make_case(n, 10 + n);
  auto a = random_state(n, 1), b = a;
  kernels::serial::cost_phase(a, k.c.values, 0.731);
  kernels::omp::cost_phase(b, k.c.values, k.c.num_edges, 0.731);
  EXPECT_LT(max_diff(a, b), 1e-13);
}

TEST_P(KernelSizes, MixerMatchesSerial) {
  const int n = GetParam();
  auto a = random_state(n, 2), b = a;
  kernels::serial::mixer(a, n, 1.234);
  kernels::omp::mixer(b, n, 1.234);
  EXPECT_LT(max_diff(a, b), 1e-13);
}

TEST_P(KernelSizes, LayerMatchesSerial) {
  const int n = GetParam();
  const Case k = make_case(n, 20 + n);
  auto a = random_state(n, 3), b = a;
  for (double t : {0.3, 2.9}) {
    kernels::serial::layer(a, n, k.c.values, t, 2 * t);
    kernels::omp::layer(b, n, k.c.values, k.c.num_edges, t, 2 * t);
  }
  EXPECT_LT(max_diff(a, b), 1e-12);
}

TEST_P(KernelSizes, SymmetricLayerMatchesFullLayer) {
  const int n = GetParam();
  const Case k = make_case(n, 30 + n);
  auto full = symmetric_state(n, 4);
  std::vector<cplx> half(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(full.size() / 2));
  for (double t : {0.4, 1.7, 2.2}) {
    kernels::omp::layer(full, n, k.c.values, k.c.num_edges, t, 0.5 * t);
    kernels::omp::layer_symmetric(half, n, k.c.values, k.c.num_edges, t, 0.5 * t);
  }
  for (std::size_t z = 0; z < half.size(); ++z)
    ASSERT_LT(std::abs(full[z] - half[z]), 1e-12) << "z=" << z;
  const std::size_t mask = full.size() - 1;
  for (std::size_t z = 0; z < full.size(); ++z)
    ASSERT_LT(std::abs(full[z] - full[z ^ mask]), 1e-12);
}

TEST_P(KernelSizes, ReductionsMatchSerial) {
  const int n = GetParam();
  const Case k = make_case(n, 40 + n);
  const auto a = random_state(n, 5);
  EXPECT_NEAR(kernels::omp::expectation(a, k.c.values), kernels::serial::expectation(a, k.c.values),
              1e-12);
  EXPECT_NEAR(kernels::omp::norm_squared(a), kernels::serial::norm_squared(a), 1e-12);
  std::vector<std::uint64_t> idx;
  for (std::uint64_t z = 0; z < a.size(); z += 3)
    idx.push_back(z);
  EXPECT_NEAR(kernels::omp::probability_mass(a, idx), kernels::serial::probability_mass(a, idx),
              1e-12);
}

TEST_P(KernelSizes, BuildCostMatchesSerial) {
  const int n = GetParam();
  const Case k = make_case(n, 50 + n);
  std::vector<std::int32_t> ref(std::size_t{1} << n);
  kernels::serial::build_cost(n, k.g.edges, ref);
  EXPECT_EQ(ref, k.c.values);
}

// Below, at and above the cache block, plus the fused-pair boundaries.
INSTANTIATE_TEST_SUITE_P(Sizes, KernelSizes,
                         ::testing::Values(1, 2, 3, 4, 5, 8, 11, 12, 13, 14, 15, 16, 17));

TEST(KernelDeterminism, BitwiseIdenticalAcrossThreadCounts) {
  const int n = 17;
  const Case k = make_case(n, 77);
  auto run = [&](int threads) {
    omp_set_num_threads(threads);
    auto a = random_state(n, 6);
    kernels::omp::layer(a, n, k.c.values, k.c.num_edges, 0.9, 0.2);
    const double e = kernels::omp::expectation(a, k.c.values);
    const double nn = kernels::omp::norm_squared(a);
    return std::make_tuple(a, e, nn);
  };
  const int saved = omp_get_max_threads();
  const auto [a1, e1, n1] = run(1);
  const auto [a4, e4, n4] = run(4);
  const auto [a3, e3, n3] = run(3);
  omp_set_num_threads(saved);
  EXPECT_EQ(std::memcmp(a1.data(), a4.data(), a1.size() * sizeof(cplx)), 0);
  EXPECT_EQ(std::memcmp(a1.data(), a3.data(), a1.size() * sizeof(cplx)), 0);
  EXPECT_EQ(e1, e4);
  EXPECT_EQ(e1, e3);
  EXPECT_EQ(n1, n4);
  EXPECT_EQ(n1, n3);
}
