/*******************************************************************************
 * Copyright (c) 2026 The qaoa-density authors.                                *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
// sweep: density-sweep driver for the QAOA simulator.
//
//   sweep run --family uniform --n 10 --m 1..25 --p 3 --instances 20 --seed 1 --out u10.csv
//   sweep google --n 10..14 --p 3 --instances 10 --out families.csv
//   sweep summarize --in u10.csv --out u10_summary.csv
//   sweep graph --family grid --n 12 --seed 3
//
// Exit codes: 0 success, 2 invalid arguments, 3 I/O failure.

#include "qaoa/common.hpp"
#include "qaoa/graph.hpp"
#include "qaoa/sweep.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitIo = 3;

// "1..5,8,10..12" -> {1,2,3,4,5,8,10,11,12}
std::vector<int> parse_int_list(const std::string &text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (item.empty())
      throw std::invalid_argument("empty item in list '" + text + "'");
    std::size_t used = 0;
    const std::size_t dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(std::stoi(item, &used));
      if (used != item.size())
        throw std::invalid_argument("bad integer '" + item + "'");
    } else {
      const std::string lo_s = item.substr(0, dots), hi_s = item.substr(dots + 2);
      std::size_t u1 = 0, u2 = 0;
      const int lo = std::stoi(lo_s, &u1), hi = std::stoi(hi_s, &u2);
      if (u1 != lo_s.size() || u2 != hi_s.size() || hi < lo)
        throw std::invalid_argument("bad range '" + item + "'");
      for (int v = lo; v <= hi; ++v)
        out.push_back(v);
    }
    if (comma == std::string::npos)
      break;
    pos = comma + 1;
  }
  return out;
}

struct CommonOptions {
  std::string depths = "3";
  int instances = 1;
  std::uint64_t seed = 0;
  std::optional<int> starts;
  int max_evals = 0;
  double xtol = qaoa::OptimizerConfig{}.xtol;
  double ftol = qaoa::OptimizerConfig{}.ftol;
  int threads = 0;
  std::string format = "csv";
  bool warm_start = false;
  bool no_timing = false;
  bool quiet = false;
  std::string out;
};

void add_common(CLI::App *cmd, CommonOptions &o) {
  cmd->add_option("--p", o.depths, "QAOA depths, e.g. 3 or 3,6,9")->capture_default_str();
  cmd->add_option("--instances", o.instances, "Random instances per cell")->capture_default_str();
  cmd->add_option("--seed", o.seed, "Base seed")->capture_default_str();
  cmd->add_option("--starts", o.starts, "Optimizer restarts (default: 50 at p=3, 20p otherwise)");
  cmd->add_option("--max-evals", o.max_evals, "Evaluations per restart (0: 200 x 2p)")
      ->capture_default_str();
  cmd->add_option("--xtol", o.xtol, "Simplex size tolerance")->capture_default_str();
  cmd->add_option("--ftol", o.ftol, "Objective tolerance")->capture_default_str();
  cmd->add_option("--threads", o.threads, "Worker threads (0: all cores)")->capture_default_str();
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv"}))->capture_default_str();
  cmd->add_flag("--warm-start", o.warm_start, "Seed each depth with the previous optimum");
  cmd->add_flag("--no-timing", o.no_timing, "Write wall_time_ms as 0");
  cmd->add_flag("--quiet", o.quiet, "No progress output");
  cmd->add_option("--out", o.out, "Output CSV path")->required();
}

qaoa::SweepSpec base_spec(const CommonOptions &o, std::mutex &log_mutex) {
  qaoa::SweepSpec spec;
  spec.depths = parse_int_list(o.depths);
  spec.instances_per_cell = o.instances;
  spec.base_seed = o.seed;
  spec.starts = o.starts;
  spec.optimizer.max_evals = o.max_evals;
  spec.optimizer.xtol = o.xtol;
  spec.optimizer.ftol = o.ftol;
  spec.threads = o.threads;
  spec.warm_start = o.warm_start;
  spec.record_timing = !o.no_timing;
  spec.output_path = o.out;
  if (!o.quiet)
    spec.on_record = [&log_mutex](const qaoa::RunRecord &r) {
      std::lock_guard lock(log_mutex);
      std::cerr << qaoa::to_string(r.family) << " n=" << r.n << " m=" << r.m << " p=" << r.p
                << " #" << r.instance << "  f=" << qaoa::format_double(r.f)
                << " eta=" << qaoa::format_double(r.eta) << '\n';
    };
  return spec;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"QAOA density-sweep benchmark harness"};
  app.require_subcommand(1);

  CommonOptions run_opts;
  std::string family = "uniform", n_list, m_list = "auto";
  auto *run = app.add_subcommand("run", "Sweep one graph family");
  run->add_option("--family", family, "uniform | regular3 | grid | complete")->capture_default_str();
  run->add_option("--n", n_list, "Node counts, e.g. 10 or 8..12")->required();
  run->add_option("--m", m_list, "Edge counts for uniform, or auto")->capture_default_str();
  add_common(run, run_opts);

  CommonOptions google_opts;
  std::string google_n;
  auto *google = app.add_subcommand("google", "Grid, 3-regular and complete families");
  google->add_option("--n", google_n, "Node range, e.g. 10..14")->required();
  add_common(google, google_opts);

  std::string in_path, summary_out;
  double bin_width = 0.0;
  auto *summarize = app.add_subcommand("summarize", "Per-cell mean and stddev of a sweep CSV");
  summarize->add_option("--in", in_path, "Sweep CSV")->required();
  summarize->add_option("--out", summary_out, "Summary CSV")->required();
  summarize->add_option("--bin-width", bin_width, "Density bin width (0: exact density)")
      ->capture_default_str();

  std::string graph_family = "uniform", graph_out;
  int graph_n = 0, graph_m = 0;
  std::uint64_t graph_seed = 0;
  auto *graph = app.add_subcommand("graph", "Generate one instance in edge-list format");
  graph->add_option("--family", graph_family)->capture_default_str();
  graph->add_option("--n", graph_n)->required();
  graph->add_option("--m", graph_m, "Edge count (uniform only)");
  graph->add_option("--seed", graph_seed)->capture_default_str();
  graph->add_option("--out", graph_out, "Output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitInvalid;
  }

  std::mutex log_mutex;
  try {
    if (*run) {
      qaoa::SweepSpec spec = base_spec(run_opts, log_mutex);
      const auto fam = qaoa::parse_family(family);
      if (!fam)
        throw std::invalid_argument("unknown family '" + family + "'");
      spec.family = *fam;
      spec.n_values = parse_int_list(n_list);
      if (m_list != "auto")
        spec.m_values = parse_int_list(m_list);
      qaoa::run_sweep(spec);
    } else if (*google) {
      qaoa::SweepSpec tmpl = base_spec(google_opts, log_mutex);
      qaoa::run_google_families(parse_int_list(google_n), tmpl.depths, tmpl.instances_per_cell,
                                tmpl.base_seed, google_opts.out, tmpl);
    } else if (*summarize) {
      std::ifstream in(in_path, std::ios::binary);
      if (!in)
        throw qaoa::IoError("cannot open '" + in_path + "'");
      const auto rows = qaoa::summarize(qaoa::read_records(in), bin_width);
      std::ofstream out(summary_out, std::ios::binary | std::ios::trunc);
      if (!out)
        throw qaoa::IoError("cannot open '" + summary_out + "' for writing");
      qaoa::write_summary(out, rows);
      if (!out)
        throw qaoa::IoError("failed writing '" + summary_out + "'");
    } else if (*graph) {
      const auto fam = qaoa::parse_family(graph_family);
      if (!fam)
        throw std::invalid_argument("unknown family '" + graph_family + "'");
      const qaoa::Graph g = qaoa::generate(*fam, graph_n, graph_m, graph_seed);
      if (graph_out.empty()) {
        qaoa::write_graph(std::cout, g);
      } else {
        std::ofstream out(graph_out, std::ios::binary | std::ios::trunc);
        if (!out)
          throw qaoa::IoError("cannot open '" + graph_out + "' for writing");
        qaoa::write_graph(out, g);
      }
    }
  } catch (const qaoa::IoError &e) {
    std::cerr << "sweep: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument &e) {
    std::cerr << "sweep: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::out_of_range &e) {
    std::cerr << "sweep: number out of range: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const qaoa::CapacityError &e) {
    std::cerr << "sweep: " << e.what() << '\n';
    return kExitInvalid;
  }
  return 0;
}
