// Copyright 2026 The conelab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CONELAB_ERRORS_H_
#define CONELAB_ERRORS_H_

#include <stdexcept>
#include <string>

namespace conelab {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad descriptor, non-finite entries, invalid tolerances.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// An iterative projection exhausted its iteration budget above tolerance.
class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& what, long iterations, double residual)
      : Error(what), iterations_(iterations), residual_(residual) {}

  long iterations() const { return iterations_; }
  double residual() const { return residual_; }

 private:
  long iterations_;
  double residual_;
};

// Moreau identities failed after projection. Indicates a broken projector,
// never bad input.
class ConsistencyFailure : public Error {
 public:
  using Error::Error;
};

// Fixed-point iterate escaped the norm cap.
class NumericalBlowup : public Error {
 public:
  using Error::Error;
};

}  // namespace conelab

#endif  // CONELAB_ERRORS_H_
