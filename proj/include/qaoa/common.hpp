/*******************************************************************************
 * Copyright (c) 2026 The qaoa-density authors.                                *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>

namespace qaoa {

using cplx = std::complex<double>;

/// Hard ceiling on qubit count for dense simulation (16M amplitudes).
inline constexpr int kMaxQubits = 24;

/// Raised when a problem does not fit the dense representation.
class CapacityError : public std::length_error {
public:
  using std::length_error::length_error;
};

/// Raised for unreadable or unwritable files.
class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

void check_capacity(int n);

} // namespace qaoa
