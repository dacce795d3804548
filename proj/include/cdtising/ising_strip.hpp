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

#ifndef CDTISING_ISING_STRIP_HPP
#define CDTISING_ISING_STRIP_HPP

#include <array>
#include <complex>
#include <utility>

#include <Eigen/Dense>

#include "cdtising/params.hpp"

namespace cdtising {

using Mat2 = Eigen::Matrix2d;
using Mat4 = Eigen::Matrix4d;

/// Single-spin transfer matrix e^{-mu} [[e^b, e^-b], [e^-b, e^b]], index 0 = spin +1.
Mat2 matrix_T(const Params& p);

/// (lambda_+, lambda_-) = e^{beta - mu} +/- e^{-(beta + mu)}.
std::pair<double, double> t_eigenvalues(const Params& p);

/// True iff lambda_+ < 1, i.e. mu > ln(2 cosh beta).
bool t_series_converges(const Params& p);

/// ln(2 cosh beta), evaluated without overflow.
double log_two_cosh(double beta);

enum class SeriesMode { ClosedForm, Series };

/// M = sum_{n >= 1} T^n. Throws DivergenceError unless mu > ln(2 cosh beta).
Mat2 matrix_M(const Params& p, SeriesMode mode = SeriesMode::ClosedForm);

/// M = c [[m, 1], [1, m]].
struct CmParams {
  double c = 0.0;
  double m = 0.0;
};

CmParams cm_params(const Params& p);

/// Which entry pattern to use for Q_m and Q_tm. The Alternate pattern carries
/// m_{++} m2_{++} at position (3,4) (1-based) where the pair-chain
/// construction gives m_{--} m2_{+-}; Q and Q_t are the same in both.
enum class QPattern { Corrected, Alternate };

/// 4x4 transfer matrices over spin pairs (a, b), indexed
/// 0 = (+,+), 1 = (+,-), 2 = (-,+), 3 = (-,-), with
///   Q   (i,j) = w_ij M(a_i,a_j) M (b_i,b_j)
///   Q_m (i,j) = w_ij M(a_i,a_j) M2(b_i,b_j)
///   Q_t (i,j) = w_ij T(a_i,a_j) M (b_i,b_j)
///   Q_tm(i,j) = w_ij T(a_i,a_j) M2(b_i,b_j)
/// and w_ij = exp(beta (a_i b_i + a_j b_j)). a is the up-spin of the upper
/// strip, b the facing down-spin of the lower strip, M2 = M * M.
struct QFamily {
  Mat4 q;
  Mat4 q_m;
  Mat4 q_t;
  Mat4 q_tm;
};

QFamily build_Q_family(const Params& p, QPattern pattern = QPattern::Corrected);

/// Which scalar closed form reproduces the numeric spectral radius.
enum class ClosedFormMatch { Cosh2Beta, CoshBeta, Both, Neither };

struct QSpectrum {
  /// Eigenvalues of Q sorted by descending modulus.
  std::array<std::complex<double>, 4> eigenvalues{};
  std::array<double, 4> moduli{};
  double spectral_radius = 0.0;
  /// c^2 (m^2+1) cosh(2b) (1 + sqrt(1 - (m^2-1)^2 / (cosh^2(2b) (m^2+1)^2)))
  double closed_cosh_2beta = 0.0;
  /// The same expression with cosh(b): the largest entry of cosh_beta_list.
  double closed_cosh_beta = 0.0;
  /// lambda_1..lambda_4 in the cosh(b) variant (e^{+b}, e^{-b}, cosh b minus/plus branches).
  std::array<double, 4> cosh_beta_list{};
  /// The list derived from the flip-symmetric block decomposition of Q:
  /// c^2 e^{+2b}(m^2-1), c^2 e^{-2b}(m^2-1), cosh(2b) minus/plus branches.
  std::array<double, 4> derived_list{};
  ClosedFormMatch match = ClosedFormMatch::Neither;
};

/// Default relative tolerance for ClosedFormMatch classification.
inline constexpr double kClosedFormTolerance = 1e-8;

QSpectrum q_spectrum(const Params& p, double match_tolerance = kClosedFormTolerance);

/// Spectral radius of an arbitrary 4x4 matrix.
double spectral_radius(const Mat4& a);

enum class ConditionStatus { Ok, OutsideTRegion };

struct LambdaCondition {
  /// Spectral radius of Q, or +infinity outside the T-region.
  double value = 0.0;
  ConditionStatus status = ConditionStatus::Ok;
};

/// The authoritative convergence parameter: numeric spectral radius of Q.
LambdaCondition lambda_condition(const Params& p);

/// The two resolvent traces that make up tr(K K^T).
struct KKTTraceTerms {
  double full = 0.0;            // tr((I - Q)^{-1} Q_m)       = sum_{k>=0} tr(Q^k Q_m)
  double t_from_zero = 0.0;     // tr((I - Q_t)^{-1} Q_tm)    = sum_{k>=0} tr(Q_t^k Q_tm)
  double t_from_one = 0.0;      // tr((I - Q_t)^{-1} Q_t Q_tm) = sum_{k>=1} ...
};

/// Throws DivergenceError if the spectral radius of Q is >= 1.
KKTTraceTerms trace_KKT_terms(const Params& p, QPattern pattern = QPattern::Corrected);

/// tr(K K^T) = tr((I - Q)^{-1} Q_m) - tr((I - Q_t)^{-1} Q_tm).
///
/// The subtracted series starts at k = 0: it removes, for every number k of
/// interface pairs, the upper-strip configurations without down-triangles,
/// and the k = 1 case is its Q_t^0 term.
double trace_KKT_closed(const Params& p);

}  // namespace cdtising

#endif  // CDTISING_ISING_STRIP_HPP
