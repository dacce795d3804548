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

#include "cdtising/params.hpp"

#include <cmath>
#include <string>

#include "cdtising/errors.hpp"

namespace cdtising {

Params Params::from_couplings(double beta, double mu) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw DomainError("beta must be finite and >= 0, got " + std::to_string(beta));
  }
  if (!(mu > 0.0) || !std::isfinite(mu)) {
    throw DomainError("mu must be finite and > 0, got " + std::to_string(mu));
  }
  return Params(beta, mu, std::exp(-mu));
}

Params Params::from_fugacity(double g, double beta) {
  if (!(g > 0.0 && g < 1.0)) {
    throw DomainError("fugacity g must lie in (0, 1), got " + std::to_string(g));
  }
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw DomainError("beta must be finite and >= 0, got " + std::to_string(beta));
  }
  return Params(beta, -std::log(g), g);
}

Params Params::with_mu_shift(double delta) const { return from_couplings(beta_, mu_ + delta); }

}  // namespace cdtising
