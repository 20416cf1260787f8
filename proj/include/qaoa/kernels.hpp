/*******************************************************************************
 * Copyright (c) 2026 The qaoa-density authors.                                *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

// Dense state-vector kernels in two flavours with identical signatures:
//
//   kernels::serial  straightforward loops, one pass per qubit; the reference
//                    the tests compare against.
//   kernels::omp     cache-blocked, fused and OpenMP-parallel; what the
//                    simulator actually calls.
//
// All spans over amplitudes have length 2^n. Reductions in kernels::omp use a
// fixed chunking and a fixed pairwise combine order, so results are bitwise
// identical for any thread count.

#include "qaoa/common.hpp"
#include "qaoa/graph.hpp"

#include <cstdint>
#include <span>

namespace qaoa::kernels {

namespace serial {

void build_cost(int n, std::span<const Edge> edges, std::span<std::int32_t> values);
void cost_phase(std::span<cplx> amps, std::span<const std::int32_t> values, double gamma);
void mixer(std::span<cplx> amps, int n, double beta);
void layer(std::span<cplx> amps, int n, std::span<const std::int32_t> values, double gamma,
           double beta);
double expectation(std::span<const cplx> amps, std::span<const std::int32_t> values);
double probability_mass(std::span<const cplx> amps, std::span<const std::uint64_t> indices);
double norm_squared(std::span<const cplx> amps);

} // namespace serial

namespace omp {

void build_cost(int n, std::span<const Edge> edges, std::span<std::int32_t> values);
/// num_edges bounds |values[z]| and sizes the phase lookup table.
void cost_phase(std::span<cplx> amps, std::span<const std::int32_t> values, int num_edges,
                double gamma);
void mixer(std::span<cplx> amps, int n, double beta);
/// Fused exp(-i beta H_x) exp(-i gamma C).
void layer(std::span<cplx> amps, int n, std::span<const std::int32_t> values, int num_edges,
           double gamma, double beta);
/// One layer on a spin-flip-symmetric state stored as its lower half
/// (2^(n-1) amplitudes, z < 2^(n-1); psi[z] = psi[~z] gives the rest).
/// values is the full 2^n cost diagonal.
void layer_symmetric(std::span<cplx> half, int n, std::span<const std::int32_t> values,
                     int num_edges, double gamma, double beta);
double expectation(std::span<const cplx> amps, std::span<const std::int32_t> values);
double probability_mass(std::span<const cplx> amps, std::span<const std::uint64_t> indices);
double norm_squared(std::span<const cplx> amps);

} // namespace omp

} // namespace qaoa::kernels
