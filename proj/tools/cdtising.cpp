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

// cdtising: command-line front end.
//
//   cdtising spectrum      --g 0.25 --nmax 200
//   cdtising ising-gap     --beta 0 --mu 1.3862944 [--smax 4]
//   cdtising critical-line [--beta-min 0 --beta-max 2 --beta-step 0.02] [-o out.csv]
//   cdtising trace-check   --beta 0.5 --mu 3.0 [--smax-cap 6]
//   cdtising brute         --beta 0 --mu 2.0 --N 3 --smax 5 [--dump k.bin]
//   cdtising sample        --g 0.25 --steps 1000000 --seed 7 [--histogram h.csv]
//
// Exit codes: 0 success, 2 domain error, 3 resource error, 4 I/O error,
// 1 anything else.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cdtising/coupled_oracle.hpp"
#include "cdtising/critical_region.hpp"
#include "cdtising/errors.hpp"
#include "cdtising/ising_strip.hpp"
#include "cdtising/params.hpp"
#include "cdtising/pure_spectrum.hpp"
#include "cdtising/report_io.hpp"
#include "cdtising/sampler.hpp"

namespace {

using cdtising::Params;
using json = nlohmann::ordered_json;

enum ExitCode { kOk = 0, kOther = 1, kDomain = 2, kResource = 3, kIo = 4 };

struct Common {
  std::string output;
  std::string format = "json";
};

void emit(const Common& common, const std::string& text) {
  if (common.output.empty()) {
    std::cout << text;
    return;
  }
  cdtising::write_file(cdtising::resolve_output_path(common.output), text);
}

void emit_json(const Common& common, const json& report) { emit(common, report.dump(2) + "\n"); }

const char* match_name(cdtising::ClosedFormMatch m) {
  switch (m) {
    case cdtising::ClosedFormMatch::Cosh2Beta: return "cosh_2beta";
    case cdtising::ClosedFormMatch::CoshBeta: return "cosh_beta";
    case cdtising::ClosedFormMatch::Both: return "both";
    case cdtising::ClosedFormMatch::Neither: return "neither";
  }
  return "unknown";
}

// spectrum ------------------------------------------------------------------

struct SpectrumArgs {
  double g = 0.0;
  int nmax = 0;
  std::vector<int> n_list{2, 4, 8, 16};
};

void run_spectrum(const SpectrumArgs& a, const Common& common) {
  if (!(a.g > 0.0 && a.g <= 0.5)) {
    throw cdtising::DomainError("spectrum requires 0 < g < 1/2 (g = 1/2 is the critical point), got g = " +
                                std::to_string(a.g));
  }
  const auto p = Params::from_fugacity(a.g);
  const double lambda = cdtising::lambda_pure(p);
  json inputs{{"command", "spectrum"}, {"g", a.g}, {"nmax", a.nmax}, {"N", a.n_list}};
  if (a.g == 0.5) {
    emit_json(common, cdtising::make_report(
                          inputs, {{"Lambda", lambda}},
                          {{"warning", "g = 1/2 is the critical point: Lambda = 1 and the "
                                       "eigenvectors leave l2; no residuals reported"},
                           {"critical", true}}));
    return;
  }
  const int nmax = a.nmax > 0 ? a.nmax : cdtising::residual_truncation_rule(p);
  inputs["nmax"] = nmax;
  const auto res = cdtising::eigen_residuals(p, nmax);
  const auto fe = cdtising::free_energy_pure(a.n_list, p, nmax);
  json free_energy = json::array();
  for (std::size_t i = 0; i < a.n_list.size(); ++i) {
    free_energy.push_back({{"N", a.n_list[i]}, {"log_Z_over_N", fe[i]}});
  }
  const auto numeric = cdtising::truncated_spectrum(p, nmax);
  emit_json(common,
            cdtising::make_report(
                inputs,
                {{"Lambda", lambda},
                 {"log_Lambda", std::log(lambda)},
                 {"right_residual", res.right},
                 {"left_residual", res.left},
                 {"free_energy", free_energy}},
                {{"critical", false},
                 {"power_iteration_eigenvalue", numeric.principal_eigenvalue},
                 {"power_iteration_iterations", numeric.iterations},
                 {"hilbert_schmidt_sum", cdtising::hilbert_schmidt_sum(p, nmax)},
                 {"residual_rule_nmax", cdtising::residual_truncation_rule(p)}}));
}

// ising-gap -----------------------------------------------------------------

struct CouplingArgs {
  double beta = 0.0;
  double mu = 0.0;
};

struct IsingGapArgs {
  CouplingArgs c;
  int smax = 0;
  std::vector<int> n_list;
};

void run_ising_gap(const IsingGapArgs& a, const Common& common) {
  const auto p = Params::from_couplings(a.c.beta, a.c.mu);
  const auto [lp, lm] = cdtising::t_eigenvalues(p);
  const auto region = cdtising::region_classify(p);
  json inputs{{"command", "ising-gap"}, {"beta", a.c.beta}, {"mu", a.c.mu}, {"smax", a.smax},
              {"N", a.n_list}};
  json outputs{{"region", cdtising::region_name(region)},
               {"lambda_T_plus", lp},
               {"lambda_T_minus", lm}};
  json diagnostics = json::object();
  if (cdtising::t_series_converges(p)) {
    const auto spec = cdtising::q_spectrum(p);
    outputs["spectral_radius"] = spec.spectral_radius;
    json moduli = json::array();
    for (double m : spec.moduli) moduli.push_back(m);
    outputs["q_moduli"] = moduli;
    diagnostics["closed_form_cosh_2beta"] = spec.closed_cosh_2beta;
    diagnostics["closed_form_cosh_beta"] = spec.closed_cosh_beta;
    diagnostics["closed_form_match"] = match_name(spec.match);
    const auto cm = cdtising::cm_params(p);
    diagnostics["c"] = cm.c;
    diagnostics["m"] = cm.m;
  } else {
    outputs["spectral_radius"] = nullptr;
    diagnostics["note"] = "mu <= ln(2 cosh beta): M and Q do not exist";
  }
  if (a.smax > 0) {
    const auto op = cdtising::build_truncated_K(p, a.smax);
    const auto rep = cdtising::principal_eigenvalue_K(op);
    outputs["K_states"] = op.dim();
    outputs["K_principal_eigenvalue"] = rep.principal_eigenvalue;
    outputs["K_second_modulus"] = rep.second_modulus;
    outputs["K_gap"] = rep.gap;
    diagnostics["K_residual"] = rep.residual;
    diagnostics["K_iterations"] = rep.iterations;
    if (!a.n_list.empty()) {
      const auto traces = cdtising::xi_n_traces(op, a.n_list);
      json seq = json::array();
      for (std::size_t i = 0; i < a.n_list.size(); ++i) {
        seq.push_back({{"N", a.n_list[i]},
                       {"Xi_N", traces[i]},
                       {"log_Xi_over_N", std::log(traces[i]) / a.n_list[i]}});
      }
      outputs["free_energy"] = seq;
      outputs["log_Lambda0"] = std::log(rep.principal_eigenvalue);
    }
  }
  emit_json(common, cdtising::make_report(inputs, outputs, diagnostics));
}

// critical-line -------------------------------------------------------------

struct CriticalArgs {
  double beta_min = 0.0;
  double beta_max = 2.0;
  double beta_step = 0.02;
  double tol = cdtising::kDefaultBoundaryTolerance;
};

std::vector<double> make_grid(const CriticalArgs& a) {
  if (!(a.beta_step > 0.0)) throw cdtising::DomainError("critical-line: --beta-step must be positive");
  if (!(a.beta_min <= a.beta_max)) {
    throw cdtising::DomainError("critical-line: --beta-min must not exceed --beta-max");
  }
  if (!(a.beta_min >= 0.0)) throw cdtising::DomainError("critical-line: beta must be >= 0");
  const auto count =
      static_cast<long>(std::floor((a.beta_max - a.beta_min) / a.beta_step + 1e-9)) + 1;
  if (count > 1'000'000) throw cdtising::ResourceError("critical-line: grid exceeds 10^6 points");
  std::vector<double> grid(count);
  for (long i = 0; i < count; ++i) grid[i] = a.beta_min + a.beta_step * static_cast<double>(i);
  return grid;
}

void run_critical_line(const CriticalArgs& a, const Common& common) {
  const auto grid = make_grid(a);
  const auto curves = cdtising::bound_lines(grid, a.tol);
  const auto crossing = cdtising::curve_crossing(curves[0], curves[4]);
  if (common.format == "csv") {
    std::ostringstream csv;
    cdtising::write_critical_csv(csv, curves);
    emit(common, csv.str());
    std::cerr << "critical-line: " << grid.size() << " rows";
    if (crossing) {
      std::cerr << "; lambda_Q_eq_1 crosses sufficient_bound near beta = "
                << cdtising::format_number(crossing->beta)
                << ", mu = " << cdtising::format_number(crossing->mu);
    } else {
      std::cerr << "; lambda_Q_eq_1 does not cross sufficient_bound in range";
    }
    std::cerr << "\n";
    return;
  }
  json curve_json = json::object();
  for (const auto& c : curves) {
    json pts = json::array();
    for (const auto& pt : c.points) pts.push_back({pt.beta, pt.mu});
    curve_json[std::string(cdtising::curve_name(c.id))] = pts;
  }
  json cross = nullptr;
  if (crossing) cross = {{"beta", crossing->beta}, {"mu", crossing->mu}};
  emit_json(common, cdtising::make_report(
                        {{"command", "critical-line"},
                         {"beta_min", a.beta_min},
                         {"beta_max", a.beta_max},
                         {"beta_step", a.beta_step},
                         {"tol", a.tol}},
                        {{"curves", curve_json}},
                        {{"rows", grid.size()}, {"lambdaQ_sufficient_crossing", cross}}));
}

// trace-check ---------------------------------------------------------------

struct TraceArgs {
  CouplingArgs c;
  int smax_cap = 6;
};

void run_trace_check(const TraceArgs& a, const Common& common) {
  if (a.smax_cap < 4 || a.smax_cap > cdtising::kMaxStateStripSize) {
    throw cdtising::DomainError("trace-check: --smax-cap must lie in [4, 8]");
  }
  const auto p = Params::from_couplings(a.c.beta, a.c.mu);
  const auto region = cdtising::region_classify(p);
  json inputs{{"command", "trace-check"}, {"beta", a.c.beta}, {"mu", a.c.mu},
              {"smax_cap", a.smax_cap}};
  json outputs{{"region", cdtising::region_name(region)}};
  json diagnostics = json::object();
  double closed = std::nan("");
  if (region == cdtising::Region::QConvergent) {
    const auto terms = cdtising::trace_KKT_terms(p);
    closed = terms.full - terms.t_from_zero;
    outputs["closed_form"] = closed;
    diagnostics["closed_form_series_from_one"] = terms.full - terms.t_from_one;
  } else {
    outputs["closed_form"] = nullptr;
    diagnostics["note"] = region == cdtising::Region::TOnly
                              ? "spectral radius of Q >= 1: the trace of K K^T diverges"
                              : "mu <= ln(2 cosh beta): M does not exist";
  }
  json direct = json::array();
  for (int s = 4; s <= a.smax_cap; ++s) {
    const double d = cdtising::trace_KKT_direct(p, s);
    json row{{"smax", s}, {"direct", d}};
    if (std::isfinite(closed)) row["relative_gap"] = std::abs(closed - d) / closed;
    direct.push_back(row);
  }
  outputs["direct"] = direct;
  emit_json(common, cdtising::make_report(inputs, outputs, diagnostics));
}

// brute ---------------------------------------------------------------------

struct BruteArgs {
  CouplingArgs c;
  int N = 2;
  int smax = 4;
  std::string dump;
};

void run_brute(const BruteArgs& a, const Common& common) {
  if (a.N < 1) throw cdtising::DomainError("brute: --N must be >= 1");
  const auto p = Params::from_couplings(a.c.beta, a.c.mu);
  const auto op = cdtising::build_truncated_K(p, a.smax);
  const int n_arr[1] = {a.N};
  const double xi = cdtising::xi_n_traces(op, n_arr)[0];
  json inputs{{"command", "brute"}, {"beta", a.c.beta}, {"mu", a.c.mu}, {"N", a.N},
              {"smax", a.smax}};
  json outputs{{"states", op.dim()}, {"Xi_N", xi}};
  json diagnostics = json::object();
  if (a.c.beta == 0.0 && a.c.mu > std::numbers::ln2) {
    const auto pure = p.with_mu_shift(-std::numbers::ln2);
    const double z = cdtising::z_n_size_truncated(a.N, pure, a.smax);
    outputs["pure_Z_N_at_mu_minus_ln2"] = z;
    diagnostics["relative_difference"] = std::abs(xi - z) / z;
  }
  if (!a.dump.empty()) {
    const auto path = cdtising::resolve_output_path(a.dump);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw cdtising::IoError("cannot open '" + path.string() + "' for writing");
    cdtising::write_operator_dump(out, op, p);
    if (!out) throw cdtising::IoError("write to '" + path.string() + "' failed");
    diagnostics["dump"] = path.string();
  }
  emit_json(common, cdtising::make_report(inputs, outputs, diagnostics));
}

// sample --------------------------------------------------------------------

struct SampleArgs {
  cdtising::ChainConfig cfg;
  std::string histogram;
};

void run_sample(const SampleArgs& a, const Common& common) {
  const auto summary = cdtising::run_chain(a.cfg);
  std::ostringstream hist;
  cdtising::write_histogram_csv(hist, summary);
  if (!a.histogram.empty()) {
    cdtising::write_file(cdtising::resolve_output_path(a.histogram), hist.str());
  }
  if (common.format == "csv") {
    emit(common, hist.str());
    return;
  }
  json from_one = json::object();
  std::uint64_t from_one_total = 0;
  for (const auto& [key, count] : summary.transitions) {
    if (key.first == 1) from_one_total += count;
  }
  for (const auto& [key, count] : summary.transitions) {
    if (key.first == 1) {
      from_one[std::to_string(key.second)] =
          static_cast<double>(count) / static_cast<double>(from_one_total);
    }
  }
  emit_json(common,
            cdtising::make_report(
                {{"command", "sample"},
                 {"g", a.cfg.g},
                 {"steps", a.cfg.steps},
                 {"burn_in", a.cfg.burn_in},
                 {"seed", a.cfg.seed},
                 {"n_cap", a.cfg.n_cap}},
                {{"tv_distance", summary.tv_distance},
                 {"mean_width", summary.mean_width},
                 {"stationary_mean_width", cdtising::stationary_mean_width(a.cfg.g)},
                 {"max_width", summary.max_width},
                 {"recorded", summary.recorded}},
                {{"tail_events", summary.tail_events},
                 {"transition_pairs", summary.transitions.size()},
                 {"empirical_row_from_1", from_one},
                 {"Lambda", cdtising::lambda_pure(Params::from_fugacity(a.cfg.g))}}));
}

void add_common(CLI::App* sub, Common& common, const char* default_format) {
  common.format = default_format;
  sub->add_option("-o,--output", common.output,
                  "Output file (relative paths resolve against $CDTISING_OUTPUT_DIR)");
  sub->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

void add_couplings(CLI::App* sub, CouplingArgs& c) {
  sub->add_option("--beta", c.beta, "Ising coupling beta >= 0")->required();
  sub->add_option("--mu", c.mu, "Cosmological constant mu > 0")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Causal triangulations coupled to Ising spins: transfer-matrix tools"};
  app.set_version_flag("--version", std::string(cdtising::kVersion));
  app.set_config("--config", "", "TOML/INI file with option defaults (flags take precedence)");
  app.require_subcommand(1);

  SpectrumArgs spectrum;
  Common spectrum_common;
  auto* s = app.add_subcommand("spectrum", "Pure CDT transfer-matrix spectrum");
  s->add_option("--g", spectrum.g, "Single-triangle fugacity in (0, 1/2]")->required();
  s->add_option("--nmax", spectrum.nmax, "Truncation size (default: tail rule)");
  s->add_option("--N", spectrum.n_list, "Strip counts for the free-energy sequence")
      ->capture_default_str();
  add_common(s, spectrum_common, "json");

  IsingGapArgs gap;
  Common gap_common;
  auto* ig = app.add_subcommand("ising-gap", "Spectral radius of Q and region at (beta, mu)");
  add_couplings(ig, gap.c);
  ig->add_option("--smax", gap.smax, "Also diagonalise the truncated K at this size (<= 6)");
  ig->add_option("--N", gap.n_list, "With --smax: (1/N) log Xi_N for these N");
  add_common(ig, gap_common, "json");

  CriticalArgs crit;
  Common crit_common;
  auto* cl = app.add_subcommand("critical-line", "Critical curves over a beta grid");
  cl->add_option("--beta-min", crit.beta_min)->capture_default_str();
  cl->add_option("--beta-max", crit.beta_max)->capture_default_str();
  cl->add_option("--beta-step", crit.beta_step)->capture_default_str();
  cl->add_option("--tol", crit.tol, "Tolerance on |rho(Q) - 1|")->capture_default_str();
  add_common(cl, crit_common, "csv");

  TraceArgs trace;
  Common trace_common;
  auto* tc = app.add_subcommand("trace-check", "Closed-form vs direct trace of K K^T");
  add_couplings(tc, trace.c);
  tc->add_option("--smax-cap", trace.smax_cap, "Largest strip size summed directly (<= 8)")
      ->capture_default_str();
  add_common(tc, trace_common, "json");

  BruteArgs brute;
  Common brute_common;
  auto* br = app.add_subcommand("brute", "Xi_N = tr K^N over the truncated state space");
  add_couplings(br, brute.c);
  br->add_option("--N", brute.N, "Number of strips")->capture_default_str();
  br->add_option("--smax", brute.smax, "Largest strip size (<= 6)")->capture_default_str();
  br->add_option("--dump", brute.dump, "Write the truncated K as a binary snapshot");
  add_common(br, brute_common, "json");

  SampleArgs sample;
  Common sample_common;
  auto* sm = app.add_subcommand("sample", "Run the limiting pure-CDT width chain");
  sm->add_option("--g", sample.cfg.g, "Fugacity in (0, 1/2)")->required();
  sm->add_option("--steps", sample.cfg.steps)->capture_default_str();
  sm->add_option("--burn-in", sample.cfg.burn_in)->capture_default_str();
  sm->add_option("--seed", sample.cfg.seed)->capture_default_str();
  sm->add_option("--ncap", sample.cfg.n_cap, "Tabulated widths per row")->capture_default_str();
  sm->add_option("--histogram", sample.histogram, "Also write the width histogram CSV here");
  add_common(sm, sample_common, "json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kDomain;
  }

  try {
    if (s->parsed()) run_spectrum(spectrum, spectrum_common);
    else if (ig->parsed()) run_ising_gap(gap, gap_common);
    else if (cl->parsed()) run_critical_line(crit, crit_common);
    else if (tc->parsed()) run_trace_check(trace, trace_common);
    else if (br->parsed()) run_brute(brute, brute_common);
    else if (sm->parsed()) run_sample(sample, sample_common);
  } catch (const cdtising::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const cdtising::ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResource;
  } catch (const cdtising::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOther;
  }
  return kOk;
}
