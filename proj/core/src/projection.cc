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

#include "conelab/projection.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include <Eigen/QR>

#include "conelab/errors.h"

namespace conelab {
namespace {

// Dykstra tries an exact active-set finish this often (in cycles).
constexpr long kPolishEvery = 16;

Matrix NormalizedColumns(const Matrix& m) {
  Matrix out = m;
  for (Index j = 0; j < out.cols(); ++j) out.col(j).normalize();
  return out;
}

Matrix SelectColumns(const Matrix& m, const std::vector<Index>& cols) {
  Matrix out(m.rows(), static_cast<Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) {
    out.col(static_cast<Index>(k)) = m.col(cols[k]);
  }
  return out;
}

// Exact projection of x onto {z : <a_i, z> = 0, i in active}, accepted only
// if it is feasible for every halfspace and has nonnegative multipliers.
// Solves the KKT system on `active` exactly. Accepts when the multipliers
// and the remaining constraints check out; `violation` is the worst KKT
// defect relative to max(1, |x|).
bool PolishActiveSet(const Matrix& normals, const std::vector<Index>& active,
                     const Vector& x, Vector* out, double* violation) {
  if (active.empty()) return false;
  const Matrix a = SelectColumns(normals, active);
  const Vector c = a.completeOrthogonalDecomposition().solve(x);
  const Vector z = x - a * c;
  // z = x + sum_i mu_i a_i with mu = -c.
  const double scale = Scale(x);
  const double defect =
      std::max({0.0, c.maxCoeff(), -(normals.transpose() * z).minCoeff()});
  if (defect > 1e-11 * scale) return false;
  *out = z;
  *violation = defect / scale;
  return true;
}

ProjectionMethod NaturalMethod(const Cone& cone) {
  return std::visit(
      [](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, cones::Monotone> ||
                      std::is_same_v<T, cones::MonotoneNonneg>) {
          return ProjectionMethod::kPava;
        } else if constexpr (std::is_same_v<T, cones::FinitelyGenerated>) {
          return ProjectionMethod::kNnlsActiveSet;
        } else if constexpr (std::is_same_v<T, cones::HalfspaceIntersection>) {
          return ProjectionMethod::kDykstra;
        } else if constexpr (std::is_same_v<T, cones::Dual>) {
          return ProjectionMethod::kMoreau;
        } else {
          return ProjectionMethod::kClosedForm;
        }
      },
      cone.variant());
}

}  // namespace

std::string_view MethodName(ProjectionMethod m) {
  switch (m) {
    case ProjectionMethod::kClosedForm:
      return "closed_form";
    case ProjectionMethod::kPava:
      return "pava";
    case ProjectionMethod::kNnlsActiveSet:
      return "nnls_active_set";
    case ProjectionMethod::kDykstra:
      return "dykstra";
    case ProjectionMethod::kMoreau:
      return "moreau";
  }
  return "unknown";
}

namespace projectors {

Vector Orthant(const Vector& x) { return x.cwiseMax(0.0); }

Vector Lorentz(const Vector& x) {
  const Index n = x.size();
  const double t = x(n - 1);
  const double u_norm = x.head(n - 1).norm();
  if (u_norm >= std::abs(t)) {
    if (u_norm == 0.0) return Vector::Zero(n);
    const double a = 0.5 * (u_norm + t);
    Vector out(n);
    out.head(n - 1) = (a / u_norm) * x.head(n - 1);
    out(n - 1) = a;
    return out;
  }
  if (t > 0.0) return x;
  return Vector::Zero(n);
}

Vector Pava(const Vector& x, Direction direction) {
  if (direction == Direction::kNondecreasing) {
    return -Pava(-x, Direction::kNonincreasing);
  }
  struct Block {
    double sum;
    Index count;
    double mean() const { return sum / static_cast<double>(count); }
  };
  std::vector<Block> blocks;
  blocks.reserve(static_cast<std::size_t>(x.size()));
  for (Index i = 0; i < x.size(); ++i) {
    blocks.push_back({x(i), 1});
    // Nonincreasing: pool while an earlier block lies below a later one.
    while (blocks.size() > 1 &&
           blocks[blocks.size() - 2].mean() < blocks.back().mean()) {
      const Block last = blocks.back();
      blocks.pop_back();
      blocks.back().sum += last.sum;
      blocks.back().count += last.count;
    }
  }
  Vector out(x.size());
  Index k = 0;
  for (const Block& b : blocks) {
    out.segment(k, b.count).setConstant(b.mean());
    k += b.count;
  }
  return out;
}

ProjectionResult Nnls(const Matrix& generators, const Vector& x,
                      const Tolerance& tol) {
  const Index m = generators.cols();
  const Matrix a = NormalizedColumns(generators);
  const double threshold = tol.solver_tol * Scale(x);

  Vector lambda = Vector::Zero(m);
  std::vector<bool> passive(static_cast<std::size_t>(m), false);
  // Columns that re-entered and left in the same step without changing
  // lambda; excluded until lambda moves again.
  std::vector<bool> blocked(static_cast<std::size_t>(m), false);
  Vector residual = x;
  long iterations = 0;

  auto passive_indices = [&] {
    std::vector<Index> idx;
    for (Index j = 0; j < m; ++j) {
      if (passive[static_cast<std::size_t>(j)]) idx.push_back(j);
    }
    return idx;
  };

  while (true) {
    const Vector w = a.transpose() * residual;
    Index enter = -1;
    double best = threshold;
    for (Index j = 0; j < m; ++j) {
      const auto sj = static_cast<std::size_t>(j);
      if (!passive[sj] && !blocked[sj] && w(j) > best) {
        best = w(j);
        enter = j;
      }
    }
    if (enter < 0) break;
    if (++iterations > tol.max_iter) {
      throw NonConvergence("nnls: iteration limit reached", iterations - 1,
                           best / Scale(x));
    }
    passive[static_cast<std::size_t>(enter)] = true;

    bool moved = false;
    for (Index inner = 0; inner <= 3 * m + 3; ++inner) {
      const std::vector<Index> idx = passive_indices();
      if (idx.empty()) break;
      const Matrix ap = SelectColumns(a, idx);
      const Vector s = ap.completeOrthogonalDecomposition().solve(x);
      if (s.minCoeff() > 0.0) {
        lambda.setZero();
        for (std::size_t k = 0; k < idx.size(); ++k) {
          lambda(idx[k]) = s(static_cast<Index>(k));
        }
        moved = true;
        break;
      }
      // Step toward s until the first passive coefficient hits zero. Ties go
      // to the lowest index because idx is ascending and the test is strict.
      double alpha = std::numeric_limits<double>::infinity();
      Index leave = -1;
      for (std::size_t k = 0; k < idx.size(); ++k) {
        const double sk = s(static_cast<Index>(k));
        if (sk <= 0.0) {
          const double lk = lambda(idx[k]);
          const double ratio = lk / (lk - sk);
          if (ratio < alpha) {
            alpha = ratio;
            leave = idx[k];
          }
        }
      }
      for (std::size_t k = 0; k < idx.size(); ++k) {
        const Index j = idx[k];
        lambda(j) += alpha * (s(static_cast<Index>(k)) - lambda(j));
        lambda(j) = std::max(lambda(j), 0.0);
      }
      lambda(leave) = 0.0;
      passive[static_cast<std::size_t>(leave)] = false;
      if (alpha > 0.0) moved = true;
      if (leave == enter && !moved) {
        blocked[static_cast<std::size_t>(enter)] = true;
        break;
      }
    }
    if (moved) std::fill(blocked.begin(), blocked.end(), false);
    residual = x - a * lambda;
  }

  const Vector w = a.transpose() * residual;
  double kkt = 0.0;
  for (Index j = 0; j < m; ++j) {
    if (!passive[static_cast<std::size_t>(j)]) kkt = std::max(kkt, w(j));
  }
  ProjectionResult result;
  result.point = a * lambda;
  result.iterations = iterations;
  result.residual = kkt / Scale(x);
  result.method = ProjectionMethod::kNnlsActiveSet;
  return result;
}

ProjectionResult Dykstra(const Matrix& normals, const Vector& x,
                         const Tolerance& tol) {
  const Index m = normals.cols();
  const Matrix a = NormalizedColumns(normals);
  ProjectionResult result;
  result.method = ProjectionMethod::kDykstra;

  if ((a.transpose() * x).minCoeff() >= 0.0) {
    result.point = x;
    return result;
  }

  const double scale = Scale(x);
  const double threshold = tol.solver_tol * scale;
  Vector y = x;
  Matrix increments = Matrix::Zero(x.size(), m);
  auto active_set = [&] {
    std::vector<Index> active;
    for (Index i = 0; i < m; ++i) {
      if (increments.col(i).squaredNorm() > 0.0) active.push_back(i);
    }
    return active;
  };
  double max_move = 0.0;
  long cycles = 0;
  Vector polished;
  double violation = 0.0;
  while (true) {
    if (cycles >= tol.max_iter) {
      throw NonConvergence("dykstra: iteration limit reached", cycles,
                           max_move / scale);
    }
    ++cycles;
    max_move = 0.0;
    for (Index i = 0; i < m; ++i) {
      const Vector z = y + increments.col(i);
      const double t = a.col(i).dot(z);
      Vector next = z;
      if (t < 0.0) next -= t * a.col(i);
      increments.col(i) = z - next;
      max_move = std::max(max_move, (next - y).norm());
      y = std::move(next);
    }
    if (max_move <= threshold) break;
    if (cycles % kPolishEvery == 0 &&
        PolishActiveSet(a, active_set(), x, &polished, &violation)) {
      result.point = std::move(polished);
      result.iterations = cycles;
      result.residual = violation;
      return result;
    }
  }

  if (PolishActiveSet(a, active_set(), x, &polished, &violation)) {
    y = std::move(polished);
  }

  result.point = std::move(y);
  result.iterations = cycles;
  result.residual = max_move / scale;
  return result;
}

}  // namespace projectors

ProjectionResult Project(const Vector& x, const Cone& cone,
                         const Tolerance& tol) {
  RequireDim(x, cone.dim(), "project");
  RequireFinite(x, "project");
  tol.Validate();

  if ((x.array() == 0.0).all()) {
    ProjectionResult zero;
    zero.point = Vector::Zero(x.size());
    zero.method = NaturalMethod(cone);
    return zero;
  }

  return std::visit(
      [&](const auto& c) -> ProjectionResult {
        using T = std::decay_t<decltype(c)>;
        ProjectionResult r;
        if constexpr (std::is_same_v<T, cones::Orthant>) {
          r.point = projectors::Orthant(x);
        } else if constexpr (std::is_same_v<T, cones::Lorentz>) {
          r.point = projectors::Lorentz(x);
        } else if constexpr (std::is_same_v<T, cones::Monotone>) {
          r.point = projectors::Pava(x, c.direction);
          r.method = ProjectionMethod::kPava;
        } else if constexpr (std::is_same_v<T, cones::MonotoneNonneg>) {
          r.point = projectors::Pava(x, c.direction).cwiseMax(0.0);
          r.method = ProjectionMethod::kPava;
        } else if constexpr (std::is_same_v<T, cones::FinitelyGenerated>) {
          r = projectors::Nnls(c.generators, x, tol);
        } else if constexpr (std::is_same_v<T, cones::HalfspaceIntersection>) {
          r = projectors::Dykstra(c.normals, x, tol);
        } else {
          // P_{K*}(x) = x + P_K(-x).
          const ProjectionResult inner = Project(-x, *c.inner, tol);
          r.point = x + inner.point;
          r.iterations = inner.iterations;
          r.residual = inner.residual;
          r.method = ProjectionMethod::kMoreau;
        }
        return r;
      },
      cone.variant());
}

Vector ProjectPoint(const Vector& x, const Cone& cone, const Tolerance& tol) {
  return Project(x, cone, tol).point;
}

MoreauSplit MoreauDecompose(const Vector& x, const Cone& cone,
                            const Tolerance& tol) {
  MoreauSplit s;
  s.p = ProjectPoint(x, cone, tol);
  s.q = ProjectPoint(-x, Dual(cone), tol);
  s.reconstruction_error = (x - (s.p - s.q)).norm();
  s.inner_product = s.p.dot(s.q);

  const double scale = Scale(x);
  const double bound = 10.0 * tol.membership_tol;
  if (s.reconstruction_error > bound * scale ||
      std::abs(s.inner_product) > bound * std::max(1.0, x.squaredNorm())) {
    std::ostringstream os;
    os << "moreau decomposition inconsistent on " << cone.Describe()
       << ": |x - (p - q)| = " << s.reconstruction_error
       << ", <p, q> = " << s.inner_product;
    throw ConsistencyFailure(os.str());
  }
  return s;
}

Vector ProjectTranslated(const Vector& base, const Cone& cone, Sign sign,
                         const Vector& y, const Tolerance& tol) {
  RequireDim(base, cone.dim(), "project_translated");
  RequireDim(y, cone.dim(), "project_translated");
  if (sign == Sign::kPlus) return base + ProjectPoint(y - base, cone, tol);
  return base - ProjectPoint(base - y, cone, tol);
}

}  // namespace conelab
