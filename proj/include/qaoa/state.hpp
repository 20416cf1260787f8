/*******************************************************************************
 * Copyright (c) 2026 The qaoa-density authors.                                *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include "qaoa/common.hpp"
#include "qaoa/cost.hpp"

#include <numbers>
#include <span>
#include <vector>

namespace qaoa {

inline constexpr double kGammaPeriod = std::numbers::pi;
inline constexpr double kBetaPeriod = 2.0 * std::numbers::pi;

/// QAOA angles for depth p. The optimizer searches the box
/// gamma in [0, pi)^p x beta in [0, 2 pi)^p; the simulator accepts any finite
/// values.
struct ParamVector {
  std::vector<double> gammas;
  std::vector<double> betas;

  int depth() const { return static_cast<int>(gammas.size()); }

  static ParamVector zeros(int p);

  /// Flat layout [gamma_1..gamma_p, beta_1..beta_p].
  static ParamVector from_flat(std::span<const double> flat);
  std::vector<double> flat() const;

  bool in_box() const;
  /// Each angle reduced periodically into its box interval.
  ParamVector wrapped() const;
  /// Append (0, 0) identity layers up to depth p.
  ParamVector padded(int p) const;

  friend bool operator==(const ParamVector &, const ParamVector &) = default;
};

/// Dense n-qubit state with 2^n complex amplitudes, exclusively owned.
class StateVector {
public:
  StateVector() = default;
  /// Computational basis state |0...0>.
  explicit StateVector(int n);
  StateVector(int n, std::vector<cplx> amps);

  static StateVector basis(int n, std::uint64_t z);

  int num_qubits() const { return n_; }
  std::size_t dim() const { return amps_.size(); }
  std::span<cplx> amps() { return amps_; }
  std::span<const cplx> amps() const { return amps_; }
  const cplx &operator[](std::size_t z) const { return amps_[z]; }

  double norm() const;

private:
  int n_ = 0;
  std::vector<cplx> amps_;
};

/// |+>^n: every amplitude 2^(-n/2).
StateVector init_plus(int n);

/// amps[z] *= exp(-i gamma C(z)).
void apply_cost_phase(StateVector &s, double gamma, const DiagonalCost &c);

/// exp(-i beta sum_i X_i), applied as one Rx-type rotation per qubit.
void apply_mixer(StateVector &s, double beta);

/// prod_k exp(-i beta_k H_x) exp(-i gamma_k C) |+>^n with layer 1 applied first.
StateVector ansatz(const DiagonalCost &c, const ParamVector &params);

/// As ansatz(), reusing the storage of out.
void ansatz_into(StateVector &out, const DiagonalCost &c, const ParamVector &params);

/// <C> at the ansatz state. Every QAOA state satisfies psi[z] = psi[~z]
/// (both H_x and C commute with the global spin flip), so only the lower half
/// of the amplitudes is evolved. scratch is reused between calls.
double ansatz_expectation(const DiagonalCost &c, const ParamVector &params,
                          std::vector<cplx> &scratch);

/// <psi| C |psi>.
double expectation(const StateVector &s, const DiagonalCost &c);

/// Probability mass on the ground set.
double overlap(const StateVector &s, const GroundSet &gs);

} // namespace qaoa
