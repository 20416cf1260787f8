/*******************************************************************************
 * Copyright (c) 2026 The qaoa-density authors.                                *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "qaoa/sweep.hpp"

#include "qaoa/common.hpp"
#include "qaoa/cost.hpp"
#include "qaoa/rng.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <limits>
#include <map>
#include <stdexcept>
#include <tuple>

namespace qaoa {

namespace {

void require(bool cond, const std::string &msg) {
  if (!cond)
    throw std::invalid_argument("sweep: " + msg);
}

struct Job {
  int n;
  int m_key; // requested m for uniform, 0 for auto families
  int instance;
};

std::ofstream open_output(const std::string &path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw IoError("cannot open '" + path + "' for writing");
  return out;
}

void flush_output(std::ofstream &out, const std::string &path,
                  const std::vector<RunRecord> &records) {
  write_records(out, records);
  out.flush();
  if (!out)
    throw IoError("failed writing '" + path + "'");
}

std::vector<int> effective_depths(const SweepSpec &spec) {
  std::vector<int> depths = spec.depths;
  if (spec.warm_start) {
    std::sort(depths.begin(), depths.end());
    depths.erase(std::unique(depths.begin(), depths.end()), depths.end());
  }
  return depths;
}

std::vector<RunRecord> run_job(const SweepSpec &spec, const std::vector<int> &depths,
                               const Job &job) {
  using clock = std::chrono::steady_clock;
  const std::uint64_t seed = graph_seed(spec.base_seed, spec.family, job.n, job.m_key, job.instance);
  const Graph g = generate(spec.family, job.n, job.m_key, seed);
  const DiagonalCost c = build_cost(g);
  const GroundSet gs = ground(c);

  std::vector<RunRecord> out;
  std::optional<ParamVector> previous;
  for (int p : depths) {
    OptimizerConfig cfg = spec.optimizer;
    cfg.starts = spec.starts.value_or(OptimizerConfig::default_starts(p));
    cfg.seed = derive_seed(seed, {static_cast<std::uint64_t>(p)});

    const auto t0 = clock::now();
    const OptimResult opt = (spec.warm_start && previous)
                                ? optimize_warmstart(c, p, previous->padded(p), cfg)
                                : optimize(c, p, cfg);
    const MetricSet ms = compute_metrics(c, gs, opt, opt.best_params);
    const auto t1 = clock::now();

    RunRecord rec;
    rec.family = spec.family;
    rec.n = g.n;
    rec.m = g.num_edges();
    rec.density = density(g);
    rec.p = p;
    rec.instance = job.instance;
    rec.graph_seed = seed;
    rec.f = ms.f;
    rec.eta = ms.eta;
    rec.r = ms.r;
    rec.c_min = ms.c_min;
    rec.expect_opt = ms.expect_opt;
    rec.degeneracy = ms.degeneracy;
    rec.evals_used = opt.evals_used;
    rec.starts = opt.starts;
    rec.budget_exhausted = opt.budget_exhausted;
    rec.best_params = opt.best_params;
    if (spec.record_timing)
      rec.wall_time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (spec.on_record)
      spec.on_record(rec);
    out.push_back(std::move(rec));
    previous = opt.best_params;
  }
  return out;
}

} // namespace

void SweepSpec::validate() const {
  require(!n_values.empty(), "no node counts given");
  require(!depths.empty(), "no depths given");
  for (int p : depths)
    require(p >= 1, "depths must be at least 1");
  require(instances_per_cell >= 1, "instances per cell must be at least 1");
  require(threads >= 0, "threads must be nonnegative");
  require(!starts || *starts >= 1, "starts must be at least 1");
  optimizer.validate();

  if (family == Family::uniform)
    require(m_values && !m_values->empty(), "the uniform family needs explicit edge counts");
  else
    require(!m_values, "edge counts are family-determined (use auto) for " +
                           std::string(to_string(family)));

  for (int n : n_values) {
    require(n >= 2 && n <= kMaxQubits,
            "n = " + std::to_string(n) + " outside [2, " + std::to_string(kMaxQubits) + "]");
    if (family == Family::regular3)
      require(n >= 4 && n % 2 == 0, "regular3 needs even n >= 4, got " + std::to_string(n));
    if (m_values)
      for (int m : *m_values)
        require(m >= 0 && m <= n * (n - 1) / 2,
                "m = " + std::to_string(m) + " impossible for n = " + std::to_string(n));
  }
}

std::uint64_t graph_seed(std::uint64_t base_seed, Family family, int n, int m, int instance) {
  const std::uint64_t m_key =
      family == Family::uniform ? static_cast<std::uint64_t>(m) : std::numeric_limits<std::uint64_t>::max();
  return derive_seed(base_seed, {static_cast<std::uint64_t>(family), static_cast<std::uint64_t>(n),
                                 m_key, static_cast<std::uint64_t>(instance)});
}

Graph generate(Family family, int n, int m, std::uint64_t seed) {
  switch (family) {
  case Family::uniform:
    return gen_gnm(n, m, seed);
  case Family::regular3:
    return gen_regular3(n, seed);
  case Family::grid:
    return gen_grid(n, seed);
  case Family::complete:
    return gen_complete(n, seed);
  }
  throw std::invalid_argument("generate: unknown family");
}

std::vector<RunRecord> run_sweep(const SweepSpec &spec) {
  spec.validate();
  std::ofstream out;
  if (!spec.output_path.empty())
    out = open_output(spec.output_path);

  std::vector<Job> jobs;
  for (int n : spec.n_values) {
    const std::vector<int> ms = spec.m_values ? *spec.m_values : std::vector<int>{0};
    for (int m : ms)
      for (int k = 0; k < spec.instances_per_cell; ++k)
        jobs.push_back({n, m, k});
  }
  const std::vector<int> depths = effective_depths(spec);

  const int threads = spec.threads > 0 ? spec.threads : omp_get_num_procs();
  std::vector<std::vector<RunRecord>> results(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  const auto njobs = static_cast<std::int64_t>(jobs.size());
  const bool over_jobs = threads > 1 && njobs >= threads;

  const int saved_threads = omp_get_max_threads();
  omp_set_max_active_levels(1);
  omp_set_num_threads(threads);
  // Enough jobs to occupy every thread: one job per thread and serial kernels
  // inside. Otherwise jobs run in turn and the optimizer restarts fan out.
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) if (over_jobs)
  for (std::int64_t k = 0; k < njobs; ++k) {
    try {
      results[k] = run_job(spec, depths, jobs[k]);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  omp_set_num_threads(saved_threads);
  for (const auto &e : errors)
    if (e)
      std::rethrow_exception(e);

  std::vector<RunRecord> records;
  std::vector<std::tuple<int, int, int, int>> keys;
  for (std::size_t k = 0; k < jobs.size(); ++k)
    for (RunRecord &rec : results[k]) {
      keys.emplace_back(jobs[k].n, jobs[k].m_key, rec.p, jobs[k].instance);
      records.push_back(std::move(rec));
    }
  std::vector<std::size_t> order(records.size());
  for (std::size_t k = 0; k < order.size(); ++k)
    order[k] = k;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  std::vector<RunRecord> sorted;
  sorted.reserve(records.size());
  for (std::size_t k : order)
    sorted.push_back(std::move(records[k]));

  if (out.is_open())
    flush_output(out, spec.output_path, sorted);
  return sorted;
}

std::vector<RunRecord> run_google_families(const std::vector<int> &n_values,
                                           const std::vector<int> &depths, int instances,
                                           std::uint64_t seed, const std::string &output,
                                           const SweepSpec &tmpl) {
  std::ofstream out;
  if (!output.empty())
    out = open_output(output);

  std::vector<RunRecord> all;
  for (Family family : {Family::grid, Family::regular3, Family::complete}) {
    SweepSpec spec = tmpl;
    spec.family = family;
    spec.m_values.reset();
    spec.depths = depths;
    spec.instances_per_cell = instances;
    spec.base_seed = seed;
    spec.output_path.clear();
    spec.n_values.clear();
    for (int n : n_values)
      if (family != Family::regular3 || (n >= 4 && n % 2 == 0))
        spec.n_values.push_back(n);
    if (spec.n_values.empty())
      continue;
    auto records = run_sweep(spec);
    all.insert(all.end(), std::make_move_iterator(records.begin()),
               std::make_move_iterator(records.end()));
  }
  if (out.is_open())
    flush_output(out, output, all);
  return all;
}

std::vector<SummaryRow> summarize(const std::vector<RunRecord> &records, double bin_width) {
  if (records.empty())
    throw std::invalid_argument("summarize: no records");

  struct Acc {
    std::string label;
    double density = 0.0;
    std::vector<const RunRecord *> members;
  };
  // Division is correctly rounded, so equal fractions (5/10, 6/12) give equal keys.
  using Key = std::tuple<int, int, double, int>;
  std::map<Key, Acc> groups;
  for (const RunRecord &rec : records) {
    double d = rec.density.value();
    std::string label = rec.density.to_decimal();
    if (bin_width > 0.0) {
      d = std::floor(d / bin_width + 1e-12) * bin_width;
      label = format_double(d);
    }
    Acc &acc = groups[{static_cast<int>(rec.family), rec.n, d, rec.p}];
    acc.label = label;
    acc.density = d;
    acc.members.push_back(&rec);
  }

  auto mean_std = [](const std::vector<const RunRecord *> &xs, double RunRecord::*field) {
    double sum = 0.0;
    for (const RunRecord *r : xs)
      sum += r->*field;
    const double mean = sum / static_cast<double>(xs.size());
    if (xs.size() < 2)
      return std::pair(mean, 0.0);
    double ss = 0.0;
    for (const RunRecord *r : xs)
      ss += (r->*field - mean) * (r->*field - mean);
    return std::pair(mean, std::sqrt(ss / static_cast<double>(xs.size() - 1)));
  };

  std::vector<SummaryRow> rows;
  for (const auto &[key, acc] : groups) {
    SummaryRow row;
    row.family = static_cast<Family>(std::get<0>(key));
    row.n = std::get<1>(key);
    row.density = acc.density;
    row.density_label = acc.label;
    row.p = std::get<3>(key);
    row.count = static_cast<int>(acc.members.size());
    std::tie(row.f_mean, row.f_std) = mean_std(acc.members, &RunRecord::f);
    std::tie(row.eta_mean, row.eta_std) = mean_std(acc.members, &RunRecord::eta);
    std::tie(row.r_mean, row.r_std) = mean_std(acc.members, &RunRecord::r);
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace qaoa
