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

#ifndef CDTISING_ERRORS_HPP
#define CDTISING_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cdtising {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (e.g. g > 1/2).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured size cap would be exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Two objects that must agree in shape do not (length or count mismatch).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// A series or resolvent that the operation needs does not converge.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

/// An iterative method failed to meet its stopping rule.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Root bracketing failed (no sign change on the search interval).
class BracketError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace cdtising

#endif  // CDTISING_ERRORS_HPP
