/*******************************************************************************
 * Copyright (c) 2026 The qaoa-density authors.                                *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "qaoa/sweep.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qaoa {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_records(std::ostream &os, const std::vector<RunRecord> &records) {
  os << kRecordHeader << '\n';
  for (const RunRecord &r : records) {
    os << to_string(r.family) << ',' << r.n << ',' << r.m << ',' << r.density.to_decimal() << ','
       << r.p << ',' << r.instance << ',' << r.graph_seed << ',' << format_double(r.f) << ','
       << format_double(r.eta) << ',' << format_double(r.r) << ',' << r.c_min << ','
       << format_double(r.expect_opt) << ',' << r.degeneracy << ',' << r.evals_used << ','
       << r.starts << ',' << format_double(r.wall_time_ms) << '\n';
  }
}

namespace {

std::vector<std::string> split(const std::string &line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream is(line);
  while (std::getline(is, field, ','))
    out.push_back(field);
  if (!line.empty() && line.back() == ',')
    out.emplace_back();
  return out;
}

template <class T>
T parse_number(const std::string &s, std::size_t line_no) {
  try {
    std::size_t used = 0;
    T v{};
    if constexpr (std::is_same_v<T, double>)
      v = std::stod(s, &used);
    else if constexpr (std::is_same_v<T, std::uint64_t>)
      v = std::stoull(s, &used);
    else
      v = static_cast<T>(std::stoll(s, &used));
    if (used != s.size())
      throw std::invalid_argument(s);
    return v;
  } catch (const std::exception &) {
    throw std::invalid_argument("csv line " + std::to_string(line_no) + ": bad number '" + s + "'");
  }
}

} // namespace

std::vector<RunRecord> read_records(std::istream &is) {
  std::string line;
  if (!std::getline(is, line))
    throw std::invalid_argument("csv: empty input");
  if (!line.empty() && line.back() == '\r')
    line.pop_back();
  if (line != kRecordHeader)
    throw std::invalid_argument("csv: unexpected header '" + line + "'");

  std::vector<RunRecord> records;
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    if (line.empty())
      continue;
    const auto f = split(line);
    if (f.size() != 16)
      throw std::invalid_argument("csv line " + std::to_string(line_no) + ": expected 16 fields");
    RunRecord r;
    const auto family = parse_family(f[0]);
    if (!family)
      throw std::invalid_argument("csv line " + std::to_string(line_no) + ": unknown family");
    r.family = *family;
    r.n = parse_number<int>(f[1], line_no);
    r.m = parse_number<int>(f[2], line_no);
    r.density = Density{r.m, r.n};
    r.p = parse_number<int>(f[4], line_no);
    r.instance = parse_number<int>(f[5], line_no);
    r.graph_seed = parse_number<std::uint64_t>(f[6], line_no);
    r.f = parse_number<double>(f[7], line_no);
    r.eta = parse_number<double>(f[8], line_no);
    r.r = parse_number<double>(f[9], line_no);
    r.c_min = parse_number<std::int32_t>(f[10], line_no);
    r.expect_opt = parse_number<double>(f[11], line_no);
    r.degeneracy = parse_number<std::int64_t>(f[12], line_no);
    r.evals_used = parse_number<long>(f[13], line_no);
    r.starts = parse_number<int>(f[14], line_no);
    r.wall_time_ms = parse_number<double>(f[15], line_no);
    if (r.density.to_decimal() != f[3])
      throw std::invalid_argument("csv line " + std::to_string(line_no) + ": density " + f[3] +
                                  " disagrees with m/n");
    records.push_back(std::move(r));
  }
  return records;
}

void write_summary(std::ostream &os, const std::vector<SummaryRow> &rows) {
  os << kSummaryHeader << '\n';
  for (const SummaryRow &r : rows)
    os << to_string(r.family) << ',' << r.n << ',' << r.density_label << ',' << r.p << ','
       << r.count << ',' << format_double(r.f_mean) << ',' << format_double(r.f_std) << ','
       << format_double(r.eta_mean) << ',' << format_double(r.eta_std) << ','
       << format_double(r.r_mean) << ',' << format_double(r.r_std) << '\n';
}

} // namespace qaoa
