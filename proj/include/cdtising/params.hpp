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

#ifndef CDTISING_PARAMS_HPP
#define CDTISING_PARAMS_HPP

namespace cdtising {

/// A point (beta, mu) of the coupling quadrant together with the
/// single-triangle fugacity g = exp(-mu).
///
/// Construct through the factories; they validate beta >= 0 and mu > 0.
/// from_fugacity() stores g exactly as given (so g = 0.25 is 0.25, not
/// exp(log(4))), with mu = -log(g).
class Params {
 public:
  static Params from_couplings(double beta, double mu);
  static Params from_fugacity(double g, double beta = 0.0);

  double beta() const noexcept { return beta_; }
  double mu() const noexcept { return mu_; }
  double g() const noexcept { return g_; }

  /// Same beta, cosmological constant shifted to mu + delta.
  Params with_mu_shift(double delta) const;

 private:
  Params(double beta, double mu, double g) : beta_(beta), mu_(mu), g_(g) {}

  double beta_;
  double mu_;
  double g_;
};

}  // namespace cdtising

#endif  // CDTISING_PARAMS_HPP
