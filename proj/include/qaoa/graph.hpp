/*******************************************************************************
 * Copyright (c) 2026 The qaoa-density authors.                                *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qaoa {

enum class Family { uniform, regular3, grid, complete };

std::string_view to_string(Family f);
std::optional<Family> parse_family(std::string_view s);

/// Undirected edge with i < j and weight in {-1, +1}.
struct Edge {
  int i = 0;
  int j = 0;
  int w = 1;

  friend bool operator==(const Edge &, const Edge &) = default;
};

/// Weighted problem graph. Edges are kept canonical: i < j, sorted
/// lexicographically by (i, j), no duplicates.
struct Graph {
  int n = 0;
  std::vector<Edge> edges;
  Family family = Family::uniform;
  std::uint64_t seed = 0;

  int num_edges() const { return static_cast<int>(edges.size()); }
  std::vector<int> degrees() const;

  friend bool operator==(const Graph &, const Graph &) = default;
};

/// Exact edges-per-node ratio m/n, kept as integers.
struct Density {
  std::int64_t edges = 0;
  std::int64_t nodes = 1;

  double value() const { return static_cast<double>(edges) / static_cast<double>(nodes); }

  /// Decimal rendering: exact when m/n terminates in base 10, otherwise
  /// rounded to 17 significant digits.
  std::string to_decimal() const;

  friend bool operator==(const Density &a, const Density &b) {
    return a.edges * b.nodes == b.edges * a.nodes;
  }
  friend auto operator<=>(const Density &a, const Density &b) {
    return a.edges * b.nodes <=> b.edges * a.nodes;
  }
};

Density density(const Graph &g);

/// Uniform G(n, m): every m-subset of the n(n-1)/2 pairs is equally likely.
Graph gen_gnm(int n, int m, std::uint64_t seed);

/// Simple 3-regular graph via the pairing model with rejection.
Graph gen_regular3(int n, std::uint64_t seed);

/// Random partial square lattice with exactly n nodes.
Graph gen_grid(int n, std::uint64_t seed);

/// Complete graph (SK-type couplings).
Graph gen_complete(int n, std::uint64_t seed);

/// Throws std::invalid_argument if any structural invariant is violated.
void validate(const Graph &g);

// Edge-list text format:
//   n m family seed
//   i j w            (one line per edge)
void write_graph(std::ostream &os, const Graph &g);
Graph read_graph(std::istream &is);
std::string serialize(const Graph &g);
Graph deserialize(const std::string &text);

} // namespace qaoa
