/*******************************************************************************
 * Copyright (c) 2026 The qaoa-density authors.                                *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "qaoa/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <vector>

namespace qaoa::kernels::omp {

namespace {

// Low qubits are mixed inside blocks of 2^kBlockQubits amplitudes (64 KiB),
// which stay resident in L2 while every low butterfly runs.
constexpr int kBlockQubits = 12;
// Reductions sum fixed chunks serially, then combine chunk partials pairwise.
constexpr std::size_t kChunk = 4096;
constexpr std::int64_t kParallelMin = std::int64_t{1} << 14;

struct Rotation {
  double c;
  double s;
};

// Two complex amplitudes per vector: (re0, im0, re1, im1).
typedef double v4d __attribute__((vector_size(32)));
typedef double v2d __attribute__((vector_size(16)));

inline v4d load4(const double *p) {
  v4d v;
  __builtin_memcpy(&v, p, sizeof v);
  return v;
}
inline void store4(double *p, v4d v) { __builtin_memcpy(p, &v, sizeof v); }
inline v2d load2(const double *p) {
  v2d v;
  __builtin_memcpy(&v, p, sizeof v);
  return v;
}
inline void store2(double *p, v2d v) { __builtin_memcpy(p, &v, sizeof v); }

#if defined(__clang__)
inline v4d swap_ri(v4d x) { return __builtin_shufflevector(x, x, 1, 0, 3, 2); }
inline v2d swap_ri(v2d x) { return __builtin_shufflevector(x, x, 1, 0); }
#else
typedef long long v4i __attribute__((vector_size(32)));
typedef long long v2i __attribute__((vector_size(16)));
inline v4d swap_ri(v4d x) { return __builtin_shuffle(x, v4i{1, 0, 3, 2}); }
inline v2d swap_ri(v2d x) { return __builtin_shuffle(x, v2i{1, 0}); }
#endif

// (a, b) <- [[c, -is], [-is, c]] (a, b). With J(x + iy) = y - ix, -is b = s J(b),
// and J is a re/im swap followed by the sign pattern folded into sv.
template <class V>
inline void butterfly(V &a, V &b, const V &cv, const V &sv) {
  const V na = cv * a + sv * swap_ri(b);
  const V nb = cv * b + sv * swap_ri(a);
  a = na;
  b = nb;
}

struct Coeffs {
  v4d c4, s4;
  v2d c2, s2;
  explicit Coeffs(Rotation r)
      : c4{r.c, r.c, r.c, r.c}, s4{r.s, -r.s, r.s, -r.s}, c2{r.c, r.c}, s2{r.s, -r.s} {}
};

// Butterflies between [p, p + 2 len) and [p + 2 stride, ...), len amplitudes each.
inline void butterfly_run(double *__restrict p0, double *__restrict p1, std::int64_t len,
                          const Coeffs &k) {
  std::int64_t i = 0;
  for (; i + 2 <= len; i += 2) {
    v4d a = load4(p0 + 2 * i), b = load4(p1 + 2 * i);
    butterfly(a, b, k.c4, k.s4);
    store4(p0 + 2 * i, a);
    store4(p1 + 2 * i, b);
  }
  for (; i < len; ++i) {
    v2d a = load2(p0 + 2 * i), b = load2(p1 + 2 * i);
    butterfly(a, b, k.c2, k.s2);
    store2(p0 + 2 * i, a);
    store2(p1 + 2 * i, b);
  }
}

template <class Body>
void parallel_for(std::int64_t count, std::int64_t work, Body &&body) {
  if (work >= kParallelMin && count > 1 && !omp_in_parallel() && omp_get_max_threads() > 1) {
#pragma omp parallel for schedule(static)
    for (std::int64_t k = 0; k < count; ++k)
      body(k);
  } else {
    for (std::int64_t k = 0; k < count; ++k)
      body(k);
  }
}

void mix_low(double *block, int qubits, const Coeffs &k) {
  const std::int64_t len = std::int64_t{1} << qubits;
  for (int q = 0; q < qubits; ++q) {
    const std::int64_t stride = std::int64_t{1} << q;
    for (std::int64_t base = 0; base < len; base += 2 * stride)
      butterfly_run(block + 2 * base, block + 2 * (base + stride), stride, k);
  }
}

// Qubits q and q+1 in one sweep: four amplitudes per group. Needs q >= 1.
void mix_pair(double *amps, int n, int q, const Coeffs &k) {
  const std::int64_t lo_len = std::int64_t{1} << q;
  const std::int64_t hi_len = std::int64_t{1} << (n - q - 2);
  parallel_for(hi_len, hi_len * lo_len * 4, [&](std::int64_t hi) {
    double *p00 = amps + 2 * (hi << (q + 2));
    double *p01 = p00 + 2 * lo_len;
    double *p10 = p01 + 2 * lo_len;
    double *p11 = p10 + 2 * lo_len;
    for (std::int64_t i = 0; i < lo_len; i += 2) {
      v4d a = load4(p00 + 2 * i), b = load4(p01 + 2 * i);
      v4d c = load4(p10 + 2 * i), d = load4(p11 + 2 * i);
      butterfly(a, b, k.c4, k.s4);
      butterfly(c, d, k.c4, k.s4);
      butterfly(a, c, k.c4, k.s4);
      butterfly(b, d, k.c4, k.s4);
      store4(p00 + 2 * i, a);
      store4(p01 + 2 * i, b);
      store4(p10 + 2 * i, c);
      store4(p11 + 2 * i, d);
    }
  });
}

void mix_single(double *amps, int n, int q, const Coeffs &k) {
  const std::int64_t lo_len = std::int64_t{1} << q;
  const std::int64_t hi_len = std::int64_t{1} << (n - q - 1);
  parallel_for(hi_len, hi_len * lo_len * 2, [&](std::int64_t hi) {
    double *p0 = amps + 2 * (hi << (q + 1));
    butterfly_run(p0, p0 + 2 * lo_len, lo_len, k);
  });
}

void mix_high(double *amps, int n, int from, const Coeffs &k) {
  int q = from;
  for (; q + 1 < n; q += 2)
    mix_pair(amps, n, q, k);
  if (q < n)
    mix_single(amps, n, q, k);
}

std::vector<cplx> phase_table(int num_edges, double gamma) {
  std::vector<cplx> table(static_cast<std::size_t>(2 * num_edges + 1));
  for (int c = -num_edges; c <= num_edges; ++c)
    table[static_cast<std::size_t>(c + num_edges)] = std::polar(1.0, -gamma * c);
  return table;
}

inline void phase_range(double *amps, const std::int32_t *values, const cplx *table_mid,
                        std::size_t len) {
  for (std::size_t z = 0; z < len; ++z) {
    const cplx ph = table_mid[values[z]];
    const double ar = amps[2 * z], ai = amps[2 * z + 1];
    amps[2 * z] = ar * ph.real() - ai * ph.imag();
    amps[2 * z + 1] = ar * ph.imag() + ai * ph.real();
  }
}

double pairwise_combine(std::vector<double> &partials) {
  if (partials.empty())
    return 0.0;
  std::size_t len = partials.size();
  while (len > 1) {
    const std::size_t half = (len + 1) / 2;
    for (std::size_t k = 0; k + half < len; ++k)
      partials[k] += partials[k + half];
    len = half;
  }
  return partials[0];
}

template <class Term>
double chunked_sum(std::size_t count, Term term) {
  const std::size_t chunks = (count + kChunk - 1) / kChunk;
  std::vector<double> partials(chunks, 0.0);
  parallel_for(static_cast<std::int64_t>(chunks), static_cast<std::int64_t>(count),
               [&](std::int64_t ch) {
                 const std::size_t begin = static_cast<std::size_t>(ch) * kChunk;
                 const std::size_t end = std::min(count, begin + kChunk);
                 double acc = 0.0;
                 for (std::size_t k = begin; k < end; ++k)
                   acc += term(k);
                 partials[static_cast<std::size_t>(ch)] = acc;
               });
  return pairwise_combine(partials);
}

double *raw(std::span<cplx> amps) { return reinterpret_cast<double *>(amps.data()); }

} // namespace

void build_cost(int n, std::span<const Edge> edges, std::span<std::int32_t> values) {
  const std::int64_t dim = std::int64_t{1} << n;
  const std::int64_t block = std::min<std::int64_t>(dim, kChunk);
  parallel_for(dim / block, dim, [&](std::int64_t b) {
    const std::int64_t begin = b * block;
    std::int32_t *out = values.data() + begin;
    std::fill(out, out + block, 0);
    for (const Edge &e : edges) {
      const int i = e.i, j = e.j, w = e.w;
      for (std::int64_t k = 0; k < block; ++k) {
        const std::int64_t z = begin + k;
        const std::int32_t parity = static_cast<std::int32_t>(((z >> i) ^ (z >> j)) & 1);
        out[k] += w * (1 - 2 * parity);
      }
    }
  });
}

void cost_phase(std::span<cplx> amps, std::span<const std::int32_t> values, int num_edges,
                double gamma) {
  const auto table = phase_table(num_edges, gamma);
  const cplx *mid = table.data() + num_edges;
  const std::int64_t dim = static_cast<std::int64_t>(amps.size());
  const std::int64_t block = std::min<std::int64_t>(dim, kChunk);
  double *a = raw(amps);
  parallel_for(dim / block, dim, [&](std::int64_t b) {
    phase_range(a + 2 * b * block, values.data() + b * block, mid,
                static_cast<std::size_t>(block));
  });
}

void mixer(std::span<cplx> amps, int n, double beta) {
  const Coeffs k(Rotation{std::cos(beta), std::sin(beta)});
  const int low = std::min(n, kBlockQubits);
  const std::int64_t block = std::int64_t{1} << low;
  const std::int64_t dim = static_cast<std::int64_t>(amps.size());
  double *a = raw(amps);
  parallel_for(dim / block, dim, [&](std::int64_t b) { mix_low(a + 2 * b * block, low, k); });
  mix_high(a, n, low, k);
}

void layer(std::span<cplx> amps, int n, std::span<const std::int32_t> values, int num_edges,
           double gamma, double beta) {
  const auto table = phase_table(num_edges, gamma);
  const cplx *mid = table.data() + num_edges;
  const Coeffs k(Rotation{std::cos(beta), std::sin(beta)});
  const int low = std::min(n, kBlockQubits);
  const std::int64_t block = std::int64_t{1} << low;
  const std::int64_t dim = static_cast<std::int64_t>(amps.size());
  double *a = raw(amps);
  parallel_for(dim / block, dim, [&](std::int64_t b) {
    phase_range(a + 2 * b * block, values.data() + b * block, mid,
                static_cast<std::size_t>(block));
    mix_low(a + 2 * b * block, low, k);
  });
  mix_high(a, n, low, k);
}

void layer_symmetric(std::span<cplx> half, int n, std::span<const std::int32_t> values,
                     int num_edges, double gamma, double beta) {
  const Rotation rot{std::cos(beta), std::sin(beta)};
  if (n == 1) {
    // psi[0] = psi[1] = h: phase C(0), then (c - i s) from the self-paired butterfly.
    half[0] *= std::polar(1.0, -gamma * values[0]) * cplx(rot.c, -rot.s);
    return;
  }
  layer(half, n - 1, values.first(half.size()), num_edges, gamma, beta);

  // Top qubit: psi[z | top] = h[z ^ low_mask], so the butterfly pairs z with
  // its reflection inside the stored half.
  const std::int64_t len = static_cast<std::int64_t>(half.size());
  const Coeffs k(rot);
  double *a = raw(half);
  parallel_for(len / 2, len, [&](std::int64_t z) {
    double *p0 = a + 2 * z;
    double *p1 = a + 2 * (len - 1 - z);
    v2d x = load2(p0), y = load2(p1);
    butterfly(x, y, k.c2, k.s2);
    store2(p0, x);
    store2(p1, y);
  });
}

double expectation(std::span<const cplx> amps, std::span<const std::int32_t> values) {
  return chunked_sum(amps.size(),
                     [&](std::size_t z) { return std::norm(amps[z]) * values[z]; });
}

double probability_mass(std::span<const cplx> amps, std::span<const std::uint64_t> indices) {
  return chunked_sum(indices.size(), [&](std::size_t k) { return std::norm(amps[indices[k]]); });
}

double norm_squared(std::span<const cplx> amps) {
  return chunked_sum(amps.size(), [&](std::size_t z) { return std::norm(amps[z]); });
}

} // namespace qaoa::kernels::omp
