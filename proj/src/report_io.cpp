// Copyright 2026 The cdtising Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cdtising/report_io.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <system_error>

#include "cdtising/errors.hpp"

namespace cdtising {

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
  if (res.ec != std::errc()) throw NumericError("format_number: conversion failed");
  return std::string(buf, res.ptr);
}

void write_critical_csv(std::ostream& out, const std::vector<CriticalCurve>& curves) {
  if (curves.size() != 5) throw ConsistencyError("write_critical_csv: expected five curves");
  const auto rows = curves[0].points.size();
  for (const auto& c : curves) {
    if (c.points.size() != rows) {
      throw ConsistencyError("write_critical_csv: curves sampled on different grids");
    }
  }
  out << "beta,mu_lambdaQ,mu_lambdaT,mu_beta0,mu_ground,mu_sufficient\n";
  for (std::size_t i = 0; i < rows; ++i) {
    out << format_number(curves[0].points[i].beta);
    for (const auto& c : curves) out << ',' << format_number(c.points[i].mu);
    out << '\n';
  }
}

void write_histogram_csv(std::ostream& out, const ChainSummary& summary) {
  out << "width,visits,empirical,stationary\n";
  const double total = static_cast<double>(summary.recorded);
  for (int n = 1; n <= summary.max_width; ++n) {
    const auto v = n < static_cast<int>(summary.visits.size()) ? summary.visits[n] : 0;
    out << n << ',' << v << ',' << format_number(static_cast<double>(v) / total) << ','
        << format_number(stationary_pi(n, summary.config.g)) << '\n';
  }
}

nlohmann::ordered_json make_report(nlohmann::ordered_json inputs, nlohmann::ordered_json outputs,
                                   nlohmann::ordered_json diagnostics) {
  nlohmann::ordered_json report;
  report["inputs"] = std::move(inputs);
  report["outputs"] = std::move(outputs);
  report["diagnostics"] = std::move(diagnostics);
  report["version"] = kVersion;
  return report;
}

std::filesystem::path resolve_output_path(const std::filesystem::path& path) {
  if (path.is_absolute()) return path;
  if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
    return std::filesystem::path(dir) / path;
  }
  return path;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

}  // namespace cdtising
