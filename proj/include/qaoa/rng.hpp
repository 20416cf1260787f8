/*******************************************************************************
 * Copyright (c) 2026 The qaoa-density authors.                                *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include <cstdint>
#include <initializer_list>

namespace qaoa {

/// SplitMix64 (Steele, Lea, Flood 2014). Every random draw in the project goes
/// through this generator so that graphs and optimizer starts are bit-identical
/// on any platform; std::*_distribution is implementation-defined and unused.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();

  /// +1 or -1 with equal probability.
  int sign();

private:
  std::uint64_t state_;
};

/// SplitMix64 output function, a bijective 64-bit mixer.
std::uint64_t mix64(std::uint64_t x);

/// Order-sensitive seed derivation: derive_seed(b, {a, c}) != derive_seed(b, {c, a}).
std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> parts);

} // namespace qaoa
