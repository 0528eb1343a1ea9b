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

#include "conelab/cone.h"

#include <cmath>
#include <sstream>
#include <utility>

#include "conelab/errors.h"
#include "conelab/projection.h"

namespace conelab {
namespace {

void RequireDimAtLeast(Index dim, Index min, const char* what) {
  if (dim < min) {
    std::ostringstream os;
    os << what << ": dimension must be at least " << min << ", got " << dim;
    throw InvalidArgument(os.str());
  }
}

void ValidateColumns(const Matrix& m, const char* what) {
  if (m.rows() < 1) throw InvalidArgument(std::string(what) + ": dim < 1");
  if (m.cols() < 1) {
    throw InvalidArgument(std::string(what) + ": at least one vector required");
  }
  if (!m.allFinite()) {
    throw InvalidArgument(std::string(what) + ": non-finite entry");
  }
  for (Index j = 0; j < m.cols(); ++j) {
    if (m.col(j).squaredNorm() == 0.0) {
      std::ostringstream os;
      os << what << ": vector " << j << " is zero";
      throw InvalidArgument(os.str());
    }
  }
}

Matrix Stack(const std::vector<Vector>& vs, const char* what) {
  if (vs.empty()) {
    throw InvalidArgument(std::string(what) + ": at least one vector required");
  }
  const Index dim = vs.front().size();
  Matrix m(dim, static_cast<Index>(vs.size()));
  for (std::size_t j = 0; j < vs.size(); ++j) {
    if (vs[j].size() != dim) {
      throw DimensionMismatch(std::string(what) +
                              ": vectors have different dimensions");
    }
    m.col(static_cast<Index>(j)) = vs[j];
  }
  return m;
}

}  // namespace

void Tolerance::Validate() const {
  if (!(solver_tol >= 0.0) || !(membership_tol >= solver_tol) ||
      !std::isfinite(membership_tol)) {
    throw InvalidArgument(
        "tolerance: require membership_tol >= solver_tol >= 0");
  }
  if (max_iter <= 0) throw InvalidArgument("tolerance: max_iter must be > 0");
}

Tolerance Tolerance::Tightened(double factor) const {
  Tolerance t = *this;
  t.solver_tol = solver_tol / factor;
  return t;
}

void RequireFinite(const Vector& x, const char* what) {
  if (!x.allFinite()) {
    throw InvalidArgument(std::string(what) + ": non-finite entry");
  }
}

void RequireDim(const Vector& x, Index dim, const char* what) {
  if (x.size() != dim) {
    std::ostringstream os;
    os << what << ": expected dimension " << dim << ", got " << x.size();
    throw DimensionMismatch(os.str());
  }
}

std::string_view DirectionName(Direction d) {
  return d == Direction::kNonincreasing ? "nonincreasing" : "nondecreasing";
}

Cone Cone::Orthant(Index dim) {
  RequireDimAtLeast(dim, 1, "orthant");
  return Cone(cones::Orthant{dim}, dim);
}

Cone Cone::Lorentz(Index dim) {
  RequireDimAtLeast(dim, 2, "lorentz");
  return Cone(cones::Lorentz{dim}, dim);
}

Cone Cone::Monotone(Index dim, Direction direction) {
  RequireDimAtLeast(dim, 2, "monotone");
  return Cone(cones::Monotone{dim, direction}, dim);
}

Cone Cone::MonotoneNonneg(Index dim, Direction direction) {
  RequireDimAtLeast(dim, 1, "monotone_nonneg");
  return Cone(cones::MonotoneNonneg{dim, direction}, dim);
}

Cone Cone::FinitelyGenerated(Matrix generators) {
  ValidateColumns(generators, "generated");
  const Index dim = generators.rows();
  return Cone(cones::FinitelyGenerated{std::move(generators)}, dim);
}

Cone Cone::FinitelyGenerated(const std::vector<Vector>& generators) {
  return FinitelyGenerated(Stack(generators, "generated"));
}

Cone Cone::HalfspaceIntersection(Matrix normals) {
  ValidateColumns(normals, "halfspaces");
  const Index dim = normals.rows();
  return Cone(cones::HalfspaceIntersection{std::move(normals)}, dim);
}

Cone Cone::HalfspaceIntersection(const std::vector<Vector>& normals) {
  return HalfspaceIntersection(Stack(normals, "halfspaces"));
}

Cone Cone::DualOf(Cone inner) {
  const Index dim = inner.dim();
  return Cone(cones::Dual{std::make_shared<const Cone>(std::move(inner))},
              dim);
}

std::string Cone::Describe() const {
  std::ostringstream os;
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, cones::Orthant>) {
          os << "orthant(" << c.dim << ")";
        } else if constexpr (std::is_same_v<T, cones::Lorentz>) {
          os << "lorentz(" << c.dim << ")";
        } else if constexpr (std::is_same_v<T, cones::Monotone>) {
          os << "monotone(" << c.dim << "," << DirectionName(c.direction)
             << ")";
        } else if constexpr (std::is_same_v<T, cones::MonotoneNonneg>) {
          os << "monotone_nonneg(" << c.dim << ","
             << DirectionName(c.direction) << ")";
        } else if constexpr (std::is_same_v<T, cones::FinitelyGenerated>) {
          os << "generated(" << c.generators.rows() << "x"
             << c.generators.cols() << ")";
        } else if constexpr (std::is_same_v<T, cones::HalfspaceIntersection>) {
          os << "halfspaces(" << c.normals.rows() << "x" << c.normals.cols()
             << ")";
        } else {
          os << "dual(" << c.inner->Describe() << ")";
        }
      },
      rep_);
  return os.str();
}

bool operator==(const Cone& a, const Cone& b) {
  if (a.dim_ != b.dim_ || a.rep_.index() != b.rep_.index()) return false;
  return std::visit(
      [&](const auto& ca) -> bool {
        using T = std::decay_t<decltype(ca)>;
        const T& cb = std::get<T>(b.rep_);
        if constexpr (std::is_same_v<T, cones::Orthant> ||
                      std::is_same_v<T, cones::Lorentz>) {
          return true;
        } else if constexpr (std::is_same_v<T, cones::Monotone> ||
                             std::is_same_v<T, cones::MonotoneNonneg>) {
          return ca.direction == cb.direction;
        } else if constexpr (std::is_same_v<T, cones::FinitelyGenerated>) {
          return ca.generators.cols() == cb.generators.cols() &&
                 ca.generators == cb.generators;
        } else if constexpr (std::is_same_v<T, cones::HalfspaceIntersection>) {
          return ca.normals.cols() == cb.normals.cols() &&
                 ca.normals == cb.normals;
        } else {
          return *ca.inner == *cb.inner;
        }
      },
      a.rep_);
}

Matrix MonotoneDifferenceVectors(Index dim, Direction direction) {
  const double s = direction == Direction::kNonincreasing ? 1.0 : -1.0;
  Matrix d = Matrix::Zero(dim, dim - 1);
  for (Index i = 0; i + 1 < dim; ++i) {
    d(i, i) = s;
    d(i + 1, i) = -s;
  }
  return d;
}

Cone Dual(const Cone& cone) {
  return std::visit(
      [&](const auto& c) -> Cone {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, cones::Orthant> ||
                      std::is_same_v<T, cones::Lorentz>) {
          return cone;
        } else if constexpr (std::is_same_v<T, cones::Monotone>) {
          return Cone::FinitelyGenerated(
              MonotoneDifferenceVectors(c.dim, c.direction));
        } else if constexpr (std::is_same_v<T, cones::FinitelyGenerated>) {
          return Cone::HalfspaceIntersection(c.generators);
        } else if constexpr (std::is_same_v<T, cones::HalfspaceIntersection>) {
          return Cone::FinitelyGenerated(c.normals);
        } else if constexpr (std::is_same_v<T, cones::Dual>) {
          return *c.inner;
        } else {
          return Cone::DualOf(cone);
        }
      },
      cone.variant());
}

double Distance(const Vector& x, const Cone& cone, const Tolerance& tol) {
  return (x - Project(x, cone, tol).point).norm();
}

double RelativeDistance(const Vector& x, const Cone& cone,
                        const Tolerance& tol) {
  return Distance(x, cone, tol) / Scale(x);
}

bool Contains(const Cone& cone, const Vector& x, const Tolerance& tol) {
  return Distance(x, cone, tol) <= tol.membership_tol * Scale(x);
}

bool Leq(const Vector& x, const Vector& y, const Cone& cone,
         const Tolerance& tol) {
  RequireDim(x, cone.dim(), "leq");
  RequireDim(y, cone.dim(), "leq");
  return Contains(cone, y - x, tol);
}

bool Comparable(const Vector& x, const Vector& y, const Cone& cone,
                const Tolerance& tol) {
  return Leq(x, y, cone, tol) || Leq(y, x, cone, tol);
}

}  // namespace conelab
