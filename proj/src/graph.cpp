/*******************************************************************************
 * Copyright (c) 2026 The qaoa-density authors.                                *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "qaoa/graph.hpp"

#include "qaoa/rng.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qaoa {

std::string_view to_string(Family f) {
  switch (f) {
  case Family::uniform:
    return "uniform";
  case Family::regular3:
    return "regular3";
  case Family::grid:
    return "grid";
  case Family::complete:
    return "complete";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view s) {
  for (Family f : {Family::uniform, Family::regular3, Family::grid, Family::complete})
    if (to_string(f) == s)
      return f;
  return std::nullopt;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(std::max(n, 0)), 0);
  for (const Edge &e : edges) {
    ++deg[e.i];
    ++deg[e.j];
  }
  return deg;
}

std::string Density::to_decimal() const {
  if (edges == 0)
    return "0";
  const std::int64_t g = std::gcd(edges, nodes);
  const std::int64_t num = edges / g;
  std::int64_t den = nodes / g;

  int twos = 0, fives = 0;
  std::int64_t rest = den;
  while (rest % 2 == 0) {
    rest /= 2;
    ++twos;
  }
  while (rest % 5 == 0) {
    rest /= 5;
    ++fives;
  }
  if (rest != 1) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", value());
    return buf;
  }

  // den = 2^a 5^b: scale to 10^max(a,b) and print as a fixed-point integer.
  const int digits = std::max(twos, fives);
  std::int64_t scale = 1;
  for (int k = 0; k < digits; ++k)
    scale *= 10;
  const std::int64_t scaled = num * (scale / den);
  std::string out = std::to_string(scaled / scale);
  if (digits > 0) {
    std::string frac = std::to_string(scaled % scale);
    frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
    while (!frac.empty() && frac.back() == '0')
      frac.pop_back();
    if (!frac.empty())
      out += "." + frac;
  }
  return out;
}

Density density(const Graph &g) {
  return Density{static_cast<std::int64_t>(g.edges.size()), std::max<std::int64_t>(g.n, 1)};
}

namespace {

void require(bool cond, const char *msg) {
  if (!cond)
    throw std::invalid_argument(msg);
}

void canonicalize(std::vector<Edge> &edges) {
  for (Edge &e : edges)
    if (e.i > e.j)
      std::swap(e.i, e.j);
  std::sort(edges.begin(), edges.end(),
            [](const Edge &a, const Edge &b) { return std::pair(a.i, a.j) < std::pair(b.i, b.j); });
}

// Weights are drawn after canonicalization so they depend only on the edge order.
void assign_weights(std::vector<Edge> &edges, SplitMix64 &rng) {
  for (Edge &e : edges)
    e.w = rng.sign();
}

std::uint64_t pair_count(int n) { return static_cast<std::uint64_t>(n) * (n - 1) / 2; }

// Lexicographic rank -> (i, j) with i < j.
std::pair<int, int> unrank_pair(std::uint64_t k, int n) {
  int i = 0;
  std::uint64_t row = static_cast<std::uint64_t>(n - 1);
  while (k >= row) {
    k -= row;
    ++i;
    --row;
  }
  return {i, i + 1 + static_cast<int>(k)};
}

} // namespace

Graph gen_gnm(int n, int m, std::uint64_t seed) {
  require(n >= 2, "gen_gnm: n must be at least 2");
  require(m >= 0, "gen_gnm: m must be nonnegative");
  const std::uint64_t total = pair_count(n);
  require(static_cast<std::uint64_t>(m) <= total, "gen_gnm: m exceeds n(n-1)/2");

  SplitMix64 rng(seed);
  // Floyd's sampling: a uniformly random m-subset of [0, total).
  std::set<std::uint64_t> chosen;
  for (std::uint64_t j = total - static_cast<std::uint64_t>(m); j < total; ++j) {
    const std::uint64_t t = rng.below(j + 1);
    if (!chosen.insert(t).second)
      chosen.insert(j);
  }

  Graph g{n, {}, Family::uniform, seed};
  g.edges.reserve(chosen.size());
  for (std::uint64_t k : chosen) {
    auto [i, j] = unrank_pair(k, n);
    g.edges.push_back({i, j, 1});
  }
  assign_weights(g.edges, rng);
  return g;
}

Graph gen_regular3(int n, std::uint64_t seed) {
  require(n >= 4, "gen_regular3: n must be at least 4");
  require(n % 2 == 0, "gen_regular3: n must be even");

  SplitMix64 rng(seed);
  std::vector<int> stubs(static_cast<std::size_t>(3 * n));
  for (int v = 0; v < n; ++v)
    stubs[3 * v] = stubs[3 * v + 1] = stubs[3 * v + 2] = v;

  std::vector<Edge> edges;
  for (;;) {
    for (std::size_t k = stubs.size() - 1; k > 0; --k)
      std::swap(stubs[k], stubs[rng.below(k + 1)]);

    edges.clear();
    std::set<std::pair<int, int>> seen;
    bool simple = true;
    for (std::size_t k = 0; k < stubs.size(); k += 2) {
      int a = stubs[k], b = stubs[k + 1];
      if (a == b) {
        simple = false;
        break;
      }
      if (a > b)
        std::swap(a, b);
      if (!seen.emplace(a, b).second) {
        simple = false;
        break;
      }
      edges.push_back({a, b, 1});
    }
    if (simple)
      break;
  }

  Graph g{n, std::move(edges), Family::regular3, seed};
  canonicalize(g.edges);
  assign_weights(g.edges, rng);
  return g;
}

Graph gen_grid(int n, std::uint64_t seed) {
  require(n >= 2, "gen_grid: n must be at least 2");
  int side = 1;
  while (side * side < n)
    ++side;

  SplitMix64 rng(seed);
  const int cells = side * side;
  std::vector<char> alive(static_cast<std::size_t>(cells), 1);
  auto live_degree = [&](int v) {
    const int r = v / side, c = v % side;
    int d = 0;
    if (r > 0 && alive[v - side])
      ++d;
    if (r + 1 < side && alive[v + side])
      ++d;
    if (c > 0 && alive[v - 1])
      ++d;
    if (c + 1 < side && alive[v + 1])
      ++d;
    return d;
  };

  std::vector<int> boundary;
  for (int remaining = cells; remaining > n; --remaining) {
    boundary.clear();
    for (int v = 0; v < cells; ++v)
      if (alive[v] && live_degree(v) < 4)
        boundary.push_back(v);
    alive[boundary[rng.below(boundary.size())]] = 0;
  }

  // Row-major relabelling of survivors keeps i < j for right/down neighbours.
  std::vector<int> label(static_cast<std::size_t>(cells), -1);
  int next = 0;
  for (int v = 0; v < cells; ++v)
    if (alive[v])
      label[v] = next++;

  Graph g{n, {}, Family::grid, seed};
  for (int v = 0; v < cells; ++v) {
    if (!alive[v])
      continue;
    const int r = v / side, c = v % side;
    if (c + 1 < side && alive[v + 1])
      g.edges.push_back({label[v], label[v + 1], 1});
    if (r + 1 < side && alive[v + side])
      g.edges.push_back({label[v], label[v + side], 1});
  }
  canonicalize(g.edges);
  assign_weights(g.edges, rng);
  return g;
}

Graph gen_complete(int n, std::uint64_t seed) {
  require(n >= 2, "gen_complete: n must be at least 2");
  SplitMix64 rng(seed);
  Graph g{n, {}, Family::complete, seed};
  g.edges.reserve(pair_count(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      g.edges.push_back({i, j, 1});
  assign_weights(g.edges, rng);
  return g;
}

void validate(const Graph &g) {
  require(g.n >= 1, "graph: n must be positive");
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    const Edge &e = g.edges[k];
    require(0 <= e.i && e.i < e.j && e.j < g.n, "graph: edge endpoints must satisfy 0 <= i < j < n");
    require(e.w == 1 || e.w == -1, "graph: weights must be +1 or -1");
    if (k > 0) {
      const Edge &p = g.edges[k - 1];
      require(std::pair(p.i, p.j) < std::pair(e.i, e.j),
              "graph: edges must be sorted and free of duplicates");
    }
  }
  if (g.family == Family::regular3) {
    require(g.n % 2 == 0, "graph: regular3 requires even n");
    for (int d : g.degrees())
      require(d == 3, "graph: regular3 requires degree 3 everywhere");
  }
  if (g.family == Family::complete)
    require(g.edges.size() == pair_count(g.n), "graph: complete requires n(n-1)/2 edges");
}

void write_graph(std::ostream &os, const Graph &g) {
  os << g.n << ' ' << g.edges.size() << ' ' << to_string(g.family) << ' ' << g.seed << '\n';
  for (const Edge &e : g.edges)
    os << e.i << ' ' << e.j << ' ' << e.w << '\n';
}

Graph read_graph(std::istream &is) {
  Graph g;
  std::size_t m = 0;
  std::string family;
  if (!(is >> g.n >> m >> family >> g.seed))
    throw std::invalid_argument("graph: malformed header");
  auto f = parse_family(family);
  if (!f)
    throw std::invalid_argument("graph: unknown family '" + family + "'");
  g.family = *f;
  g.edges.resize(m);
  for (Edge &e : g.edges)
    if (!(is >> e.i >> e.j >> e.w))
      throw std::invalid_argument("graph: truncated edge list");
  validate(g);
  return g;
}

std::string serialize(const Graph &g) {
  std::ostringstream os;
  write_graph(os, g);
  return os.str();
}

Graph deserialize(const std::string &text) {
  std::istringstream is(text);
  return read_graph(is);
}

} // namespace qaoa
