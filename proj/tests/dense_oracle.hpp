/*******************************************************************************
 * Copyright (c) 2026 The qaoa-density authors.                                *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

// Test-only reference: QAOA by dense 2^n x 2^n matrices. The Hamiltonians are
// assembled from Kronecker products of Pauli matrices and exponentiated by
// eigendecomposition, so nothing here shares code with the bit-twiddling
// kernels under test. Practical for n <= 6.

#include "qaoa/graph.hpp"
#include "qaoa/state.hpp"

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace qaoa::oracle {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Mat kron(const Mat &a, const Mat &b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline Mat pauli_x() {
  Mat m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

inline Mat pauli_z() {
  Mat m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

/// P acting on qubit `site`; qubit 0 is the least significant index bit, i.e.
/// the rightmost Kronecker factor.
inline Mat on_site(const Mat &p, int site, int n) {
  Mat out = Mat::Identity(1, 1);
  for (int k = n - 1; k >= 0; --k)
    out = kron(out, k == site ? p : Mat::Identity(2, 2));
  return out;
}

inline Mat problem_hamiltonian(const Graph &g) {
  const Eigen::Index dim = Eigen::Index{1} << g.n;
  Mat h = Mat::Zero(dim, dim);
  for (const Edge &e : g.edges)
    h += static_cast<double>(e.w) * on_site(pauli_z(), e.i, g.n) * on_site(pauli_z(), e.j, g.n);
  return h;
}

inline Mat driver_hamiltonian(int n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  Mat h = Mat::Zero(dim, dim);
  for (int i = 0; i < n; ++i)
    h += on_site(pauli_x(), i, n);
  return h;
}

/// exp(-i t H) for Hermitian H.
inline Mat expm_hermitian(const Mat &h, double t) {
  Eigen::SelfAdjointEigenSolver<Mat> eig(h);
  const Eigen::VectorXd lambda = eig.eigenvalues();
  Vec phases(lambda.size());
  for (Eigen::Index k = 0; k < lambda.size(); ++k)
    phases(k) = std::exp(std::complex<double>(0.0, -t * lambda(k)));
  return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

inline Vec plus_state(int n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  return Vec::Constant(dim, std::complex<double>(std::pow(2.0, -0.5 * n), 0.0));
}

inline Vec ansatz(const Graph &g, const ParamVector &params) {
  const Mat hc = problem_hamiltonian(g);
  const Mat hx = driver_hamiltonian(g.n);
  Vec psi = plus_state(g.n);
  for (int k = 0; k < params.depth(); ++k)
    psi = expm_hermitian(hx, params.betas[k]) * (expm_hermitian(hc, params.gammas[k]) * psi);
  return psi;
}

inline double expectation(const Graph &g, const Vec &psi) {
  return (psi.adjoint() * problem_hamiltonian(g) * psi)(0, 0).real();
}

} // namespace qaoa::oracle
