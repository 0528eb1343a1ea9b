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

#ifndef CONELAB_NCP_H_
#define CONELAB_NCP_H_

#include <functional>
#include <variant>

#include "conelab/cone.h"
#include "conelab/types.h"

namespace conelab {

// f(x) = M x + q.
struct AffineMap {
  Matrix M;
  Vector q;
};

using VectorMap = std::function<Vector(const Vector&)>;

// Cone complementarity problem: find x in K with f(x) in K* and
// <x, f(x)> = 0. Equivalently x = P_K(x - step * f(x)) for any step > 0.
struct NcpProblem {
  Cone cone;
  std::variant<AffineMap, VectorMap> f;
  double step = 1.0;

  Index dim() const { return cone.dim(); }
  Vector Evaluate(const Vector& x) const;
  // Throws InvalidArgument / DimensionMismatch.
  void Validate() const;
};

struct NcpResiduals {
  double fixed_point_residual = 0.0;  // |x - P_K(x - step f(x))|
  double complementarity_gap = 0.0;   // |<x, f(x)>|
  double primal_dist = 0.0;           // dist(x, K)
  double dual_dist = 0.0;             // dist(f(x), K*)
  // fixed_point_residual, primal_dist and dual_dist are within
  // solver_tol * max(1, |x|), and the gap within
  // solver_tol * max(1, |x| |f(x)|).
  bool converged = false;
};

struct NcpSolution {
  Vector x;
  long iterations = 0;
  NcpResiduals residuals;
};

// Projected fixed-point iteration x <- P_K(x - step f(x)), starting from
// P_K(x0). Stops once the current iterate meets every NcpResiduals
// threshold or after max_iter updates; `iterations` counts updates. Not converging is reported through residuals.converged.
// Throws NumericalBlowup if an iterate norm exceeds 1e12.
NcpSolution Solve(const NcpProblem& problem, const Vector& x0, long max_iter,
                  const Tolerance& tol = {});

NcpResiduals Residuals(const Vector& x, const NcpProblem& problem,
                       const Tolerance& tol = {});

// 1 / lambda_max(M) with lambda_max from 50 power-iteration steps. Intended
// for symmetric positive definite M.
double EstimateStep(const Matrix& M);

}  // namespace conelab

#endif  // CONELAB_NCP_H_
