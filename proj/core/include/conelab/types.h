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

#ifndef CONELAB_TYPES_H_
#define CONELAB_TYPES_H_

#include <Eigen/Core>

#include <algorithm>

namespace conelab {

using Index = Eigen::Index;
using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Numerical tolerances shared by every operation.
//
// membership_tol is relative: a point z counts as inside a cone when its
// distance to the cone is at most membership_tol * max(1, |z|).
// solver_tol is the stopping threshold of the iterative projectors and of the
// fixed-point solver, scaled the same way.
struct Tolerance {
  double membership_tol = 1e-8;
  double solver_tol = 1e-10;
  long max_iter = 100000;

  // Throws InvalidArgument unless membership_tol >= solver_tol >= 0 and
  // max_iter > 0.
  void Validate() const;

  // Same tolerances with solver_tol divided by `factor` (membership_tol is
  // left alone unless it would fall below the new solver_tol).
  Tolerance Tightened(double factor) const;
};

inline double Scale(const Vector& x) { return std::max(1.0, x.norm()); }

// Throws InvalidArgument if any entry is NaN or infinite.
void RequireFinite(const Vector& x, const char* what);

// Throws DimensionMismatch if x.size() != dim.
void RequireDim(const Vector& x, Index dim, const char* what);

}  // namespace conelab

#endif  // CONELAB_TYPES_H_
