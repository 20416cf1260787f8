/*******************************************************************************
 * Copyright (c) 2026 The qaoa-density authors.                                *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include "qaoa/graph.hpp"
#include "qaoa/metrics.hpp"
#include "qaoa/optimizer.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qaoa {

struct RunRecord;

struct SweepSpec {
  Family family = Family::uniform;
  std::vector<int> n_values;
  /// Edge counts for the uniform family; nullopt means "auto" (family-determined).
  std::optional<std::vector<int>> m_values;
  std::vector<int> depths;
  int instances_per_cell = 1;
  std::uint64_t base_seed = 0;
  /// Tolerances and budget; `starts` and `seed` are filled per cell.
  OptimizerConfig optimizer;
  /// Restarts per optimisation; nullopt uses OptimizerConfig::default_starts(p).
  std::optional<int> starts;
  /// Each depth after the first starts one run from the previous optimum
  /// padded with identity layers.
  bool warm_start = false;
  /// 0 = all available cores.
  int threads = 0;
  /// When false, wall_time_ms is written as 0 so whole files are reproducible.
  bool record_timing = true;
  /// Empty: do not write a file.
  std::string output_path;
  /// Called once per finished record, from the thread that produced it.
  std::function<void(const RunRecord &)> on_record;

  void validate() const;
};

struct RunRecord {
  Family family = Family::uniform;
  int n = 0;
  int m = 0;
  Density density;
  int p = 0;
  int instance = 0;
  std::uint64_t graph_seed = 0;
  double f = 0.0;
  double eta = 0.0;
  double r = 1.0;
  std::int32_t c_min = 0;
  double expect_opt = 0.0;
  std::int64_t degeneracy = 0;
  long evals_used = 0;
  int starts = 0;
  double wall_time_ms = 0.0;
  /// Not serialised.
  bool budget_exhausted = false;
  ParamVector best_params;
};

/// Seed for instance `instance` of the (family, n, m) cell; independent of depth.
/// `m` is ignored for families whose edge count is determined by n.
std::uint64_t graph_seed(std::uint64_t base_seed, Family family, int n, int m, int instance);

Graph generate(Family family, int n, int m, std::uint64_t seed);

/// Runs every (n, m, p, instance) cell; records come back in that order.
/// Throws IoError before any computation if output_path cannot be opened.
std::vector<RunRecord> run_sweep(const SweepSpec &spec);

/// Grid, 3-regular (even n only) and complete sweeps over n_values with shared
/// seeding, concatenated in that family order. `tmpl` supplies everything but
/// family, n_values and m_values.
std::vector<RunRecord> run_google_families(const std::vector<int> &n_values,
                                           const std::vector<int> &depths, int instances,
                                           std::uint64_t seed, const std::string &output,
                                           const SweepSpec &tmpl = {});

struct SummaryRow {
  Family family = Family::uniform;
  int n = 0;
  /// Exact density, or the lower edge of the bin when binning.
  double density = 0.0;
  std::string density_label;
  int p = 0;
  int count = 0;
  double f_mean = 0.0, f_std = 0.0;
  double eta_mean = 0.0, eta_std = 0.0;
  double r_mean = 0.0, r_std = 0.0;
};

/// Per (family, n, density bin, p) mean and sample standard deviation.
/// bin_width <= 0 groups by exact density. Throws on empty input.
std::vector<SummaryRow> summarize(const std::vector<RunRecord> &records, double bin_width = 0.0);

// CSV contract.
inline constexpr const char *kRecordHeader =
    "family,n,m,density,p,instance,graph_seed,f,eta,r,c_min,expect_opt,degeneracy,evals_used,"
    "starts,wall_time_ms";
inline constexpr const char *kSummaryHeader =
    "family,n,density,p,count,f_mean,f_std,eta_mean,eta_std,r_mean,r_std";

std::string format_double(double v);
void write_records(std::ostream &os, const std::vector<RunRecord> &records);
std::vector<RunRecord> read_records(std::istream &is);
void write_summary(std::ostream &os, const std::vector<SummaryRow> &rows);

} // namespace qaoa
