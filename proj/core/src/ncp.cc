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

#include "conelab/ncp.h"

#include <cmath>
#include <sstream>

#include "conelab/errors.h"
#include "conelab/projection.h"

namespace conelab {
namespace {

constexpr double kBlowupNorm = 1e12;

}  // namespace

Vector NcpProblem::Evaluate(const Vector& x) const {
  if (const auto* affine = std::get_if<AffineMap>(&f)) {
    return affine->M * x + affine->q;
  }
  Vector y = std::get<VectorMap>(f)(x);
  RequireDim(y, x.size(), "ncp: mapping output");
  return y;
}

void NcpProblem::Validate() const {
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw InvalidArgument("ncp: step must be positive and finite");
  }
  if (const auto* affine = std::get_if<AffineMap>(&f)) {
    if (affine->M.rows() != dim() || affine->M.cols() != dim()) {
      std::ostringstream os;
      os << "ncp: M must be " << dim() << "x" << dim() << ", got "
         << affine->M.rows() << "x" << affine->M.cols();
      throw DimensionMismatch(os.str());
    }
    RequireDim(affine->q, dim(), "ncp: q");
    if (!affine->M.allFinite()) throw InvalidArgument("ncp: M not finite");
    RequireFinite(affine->q, "ncp: q");
  } else if (!std::get<VectorMap>(f)) {
    throw InvalidArgument("ncp: empty mapping");
  }
}

NcpResiduals Residuals(const Vector& x, const NcpProblem& problem,
                       const Tolerance& tol) {
  problem.Validate();
  RequireDim(x, problem.dim(), "ncp residuals");
  RequireFinite(x, "ncp residuals");

  const Vector fx = problem.Evaluate(x);
  NcpResiduals r;
  r.fixed_point_residual =
      (x - ProjectPoint(x - problem.step * fx, problem.cone, tol)).norm();
  r.complementarity_gap = std::abs(x.dot(fx));
  r.primal_dist = Distance(x, problem.cone, tol);
  r.dual_dist = Distance(fx, Dual(problem.cone), tol);

  const double scale = Scale(x);
  const double bound = tol.solver_tol * scale;
  r.converged = r.fixed_point_residual <= bound && r.primal_dist <= bound &&
                r.dual_dist <= bound &&
                r.complementarity_gap <=
                    tol.solver_tol * std::max(1.0, x.norm() * fx.norm());
  return r;
}

NcpSolution Solve(const NcpProblem& problem, const Vector& x0, long max_iter,
                  const Tolerance& tol) {
  problem.Validate();
  RequireDim(x0, problem.dim(), "ncp: x0");
  RequireFinite(x0, "ncp: x0");
  if (max_iter < 0) throw InvalidArgument("ncp: max_iter must be >= 0");

  NcpSolution sol;
  sol.x = ProjectPoint(x0, problem.cone, tol);
  while (true) {
    sol.residuals = Residuals(sol.x, problem, tol);
    if (sol.residuals.converged || sol.iterations >= max_iter) break;
    sol.x = ProjectPoint(sol.x - problem.step * problem.Evaluate(sol.x),
                         problem.cone, tol);
    ++sol.iterations;
    if (!sol.x.allFinite() || sol.x.norm() > kBlowupNorm) {
      std::ostringstream os;
      os << "ncp: iterate norm exceeded " << kBlowupNorm << " after "
         << sol.iterations << " iterations";
      throw NumericalBlowup(os.str());
    }
  }
  return sol;
}

double EstimateStep(const Matrix& M) {
  if (M.rows() != M.cols() || M.rows() == 0) {
    throw InvalidArgument("estimate_step: M must be square and nonempty");
  }
  Vector v = Vector::Ones(M.rows()).normalized();
  double lambda = 0.0;
  for (int k = 0; k < 50; ++k) {
    Vector w = M * v;
    const double norm = w.norm();
    if (norm == 0.0) break;
    lambda = v.dot(w);
    v = w / norm;
  }
  lambda = std::max(lambda, (M * v).norm());
  if (!(lambda > 0.0)) throw InvalidArgument("estimate_step: M has no positive spectrum");
  return 1.0 / lambda;
}

}  // namespace conelab
