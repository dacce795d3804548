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

#ifndef CDTISING_COUPLED_ORACLE_HPP
#define CDTISING_COUPLED_ORACLE_HPP

#include <iosfwd>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "cdtising/linalg.hpp"
#include "cdtising/params.hpp"
#include "cdtising/strip_geometry.hpp"

namespace cdtising {

/// Largest strip size accepted by enumerate_states.
inline constexpr int kMaxStateStripSize = 8;
/// Largest strip size for which the dense K is materialised (2604 states).
inline constexpr int kMaxDenseStripSize = 6;

/// A single-strip triangulation with the spins it supports.
struct CoupledState {
  StripTriangulation strip;
  SpinConfiguration spins;

  int size() const noexcept { return static_cast<int>(strip.size()); }
};

/// Number of states with exactly s triangles: (2^(s-1) - 1) 2^s.
long long states_of_size(int s);

/// All states with 2 <= s <= s_max, ordered by s, then strip (Up < Down),
/// then spins (+1 < -1, position 0 most significant).
std::vector<CoupledState> enumerate_states(int s_max);

/// K((t,s),(t',s')) = 1[n_do(t) = n_up(t')] exp(-(mu/2)(n + n'))
///                    exp(-(beta/2)(H(s) + H(s')) - beta V(s, s')).
double k_entry(const CoupledState& a, const CoupledState& b, const Params& p);

/// Dense K over enumerate_states(s_max).
struct CoupledOperator {
  int s_max = 0;
  std::vector<CoupledState> states;
  Eigen::MatrixXd entries;

  int dim() const noexcept { return static_cast<int>(states.size()); }
};

/// Throws ResourceError for s_max > kMaxDenseStripSize.
CoupledOperator build_truncated_K(const Params& p, int s_max);

/// Index permutation sending each state to its globally spin-flipped twin.
std::vector<int> spin_flip_permutation(const std::vector<CoupledState>& states);

/// Xi_N = tr K^N over the s_max truncation (matrix trace).
double xi_n_truncated(int N, const Params& p, int s_max);

/// tr K^N for each N of an already built operator.
std::vector<double> xi_n_traces(const CoupledOperator& k, std::span<const int> n_list);

/// sum_{a,b} K(a,b)^2 over the s_max truncation (2 <= s_max <= 8).
///
/// The pair sum is regrouped by interface: each state contributes
/// exp(-mu s - beta H) once under its down-spin pattern (as a lower strip)
/// and once under its up-spin pattern (as an upper strip), and matching
/// patterns of equal length are combined with exp(2 beta d.u).
double trace_KKT_direct(const Params& p, int s_max);

/// The same sum taken literally over all ordered state pairs.
double trace_KKT_direct_pairwise(const Params& p, int s_max);

/// Power iteration on the dense truncated K; the reported gap comes from a
/// deflated power run. Throws NumericError on non-convergence.
SpectralReport principal_eigenvalue_K(const Params& p, int s_max);
SpectralReport principal_eigenvalue_K(const CoupledOperator& k);

/// Binary snapshot of a truncated operator (little-endian):
///   char[4]  magic "CDTK"
///   uint32   format version (1)
///   uint32   s_max
///   uint64   number of states n
///   float64  beta, mu
///   n times: uint8 size s, s x uint8 kinds (0 = Up, 1 = Down),
///            s x int8 spins (+1/-1)
///   n*n float64 entries, row-major
void write_operator_dump(std::ostream& out, const CoupledOperator& k, const Params& p);

struct OperatorDump {
  CoupledOperator op;
  double beta = 0.0;
  double mu = 0.0;
};

OperatorDump read_operator_dump(std::istream& in);

}  // namespace cdtising

#endif  // CDTISING_COUPLED_ORACLE_HPP
