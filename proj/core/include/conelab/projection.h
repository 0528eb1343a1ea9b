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

#ifndef CONELAB_PROJECTION_H_
#define CONELAB_PROJECTION_H_

#include <string_view>

#include "conelab/cone.h"
#include "conelab/types.h"

namespace conelab {

enum class ProjectionMethod { kClosedForm, kPava, kNnlsActiveSet, kDykstra, kMoreau };

std::string_view MethodName(ProjectionMethod m);

struct ProjectionResult {
  Vector point;
  // Zero for closed-form paths. Outer active-set iterations for NNLS, full
  // cycles for Dykstra.
  long iterations = 0;
  // The solver's own stopping metric, relative to max(1, |x|).
  double residual = 0.0;
  ProjectionMethod method = ProjectionMethod::kClosedForm;
};

// Euclidean projection of x onto the cone.
//
// Dispatch: orthant and Lorentz use closed forms, monotone cones use
// pool-adjacent-violators, generated cones use Lawson-Hanson NNLS,
// halfspace intersections use Dykstra, and Dual{K} uses the Moreau identity
// P_{K*}(x) = x + P_K(-x). Projecting the zero vector returns zero without
// touching any solver.
ProjectionResult Project(const Vector& x, const Cone& cone,
                         const Tolerance& tol = {});

// Shorthand for Project(x, cone, tol).point.
Vector ProjectPoint(const Vector& x, const Cone& cone,
                    const Tolerance& tol = {});

struct MoreauSplit {
  Vector p;  // P_K x
  Vector q;  // P_L(-x), L the dual cone
  double reconstruction_error;  // |x - (p - q)|
  double inner_product;         // <p, q>
};

// x = P_K x - P_L(-x) with <P_K x, P_L(-x)> = 0.
//
// Both identities are re-checked before returning, at
// 10 * membership_tol * max(1, |x|) and 10 * membership_tol * max(1, |x|^2);
// ConsistencyFailure is thrown if either is violated.
MoreauSplit MoreauDecompose(const Vector& x, const Cone& cone,
                            const Tolerance& tol = {});

enum class Sign { kPlus, kMinus };

// Projection onto base + K (kPlus) or base - K (kMinus).
Vector ProjectTranslated(const Vector& base, const Cone& cone, Sign sign,
                         const Vector& y, const Tolerance& tol = {});

// Individual projectors, exposed for testing and benchmarking. They validate
// nothing beyond what they need and do not short-circuit zero.
namespace projectors {

Vector Orthant(const Vector& x);

// Second-order cone {(u, t) : |u| <= t}. The radial branch is taken whenever
// |u| >= |t|, which keeps the formula continuous on the boundary.
Vector Lorentz(const Vector& x);

// Unit-weight isotonic regression, nonincreasing or nondecreasing.
Vector Pava(const Vector& x, Direction direction);

// min_{lambda >= 0} |G lambda - x|. Returns G lambda in `point`. When several
// passive coefficients reach zero on the same step, only the lowest index
// leaves the passive set.
ProjectionResult Nnls(const Matrix& generators, const Vector& x,
                      const Tolerance& tol);

// Dykstra's cyclic projections onto {z : <a_i, z> >= 0}. Stops when no
// halfspace moves the iterate by more than solver_tol * max(1, |x|) during a
// full cycle, then attempts an exact active-set refinement of the limit
// point (kept only when it satisfies the KKT conditions). The same
// refinement is also tried every 16 cycles and ends the iteration early
// once it passes; residual is then the KKT defect.
ProjectionResult Dykstra(const Matrix& normals, const Vector& x,
                         const Tolerance& tol);

}  // namespace projectors

}  // namespace conelab

#endif  // CONELAB_PROJECTION_H_
