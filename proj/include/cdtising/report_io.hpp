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

#ifndef CDTISING_REPORT_IO_HPP
#define CDTISING_REPORT_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cdtising/critical_region.hpp"
#include "cdtising/sampler.hpp"

namespace cdtising {

inline constexpr const char* kVersion = CDTISING_VERSION;
/// Environment variable naming the default output directory.
inline constexpr const char* kOutputDirEnv = "CDTISING_OUTPUT_DIR";

/// Shortest round-trip of v at 12 significant digits, independent of locale.
std::string format_number(double v);

/// Header `beta,mu_lambdaQ,mu_lambdaT,mu_beta0,mu_ground,mu_sufficient`,
/// then one row per grid point. curves must come from bound_lines().
void write_critical_csv(std::ostream& out, const std::vector<CriticalCurve>& curves);

/// Header `width,visits,empirical,stationary`, widths 1..max_width.
void write_histogram_csv(std::ostream& out, const ChainSummary& summary);

/// {"inputs", "outputs", "diagnostics", "version"}.
nlohmann::ordered_json make_report(nlohmann::ordered_json inputs, nlohmann::ordered_json outputs,
                                   nlohmann::ordered_json diagnostics);

/// Relative paths are resolved against $CDTISING_OUTPUT_DIR when set.
std::filesystem::path resolve_output_path(const std::filesystem::path& path);

/// Writes the whole file or throws IoError.
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace cdtising

#endif  // CDTISING_REPORT_IO_HPP
