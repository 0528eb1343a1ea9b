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

#ifndef CONELAB_CONE_H_
#define CONELAB_CONE_H_

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "conelab/types.h"

namespace conelab {

enum class Direction { kNonincreasing, kNondecreasing };

std::string_view DirectionName(Direction d);

class Cone;

namespace cones {

// {x : x_i >= 0}.
struct Orthant {
  Index dim;
};

// {(u, t) : |u| <= t}, t is the last coordinate.
struct Lorentz {
  Index dim;
};

// {x : x_1 >= ... >= x_n} for kNonincreasing, reversed otherwise.
struct Monotone {
  Index dim;
  Direction direction;
};

// Monotone intersected with the nonnegative orthant.
struct MonotoneNonneg {
  Index dim;
  Direction direction;
};

// {G * lambda : lambda >= 0}; generators are the columns of `generators`.
struct FinitelyGenerated {
  Matrix generators;
};

// {x : <a_i, x> >= 0 for every column a_i of `normals`}.
struct HalfspaceIntersection {
  Matrix normals;
};

// The dual cone of `inner`.
struct Dual {
  std::shared_ptr<const Cone> inner;
};

}  // namespace cones

// An immutable description of a closed convex cone in R^dim.
//
// Instances are only created through the factory functions, which validate
// the representation: dimensions agree, every embedded vector is finite and
// nonzero, generator/normal lists are nonempty. Copies are cheap; the Dual
// variant shares its operand.
class Cone {
 public:
  using Variant =
      std::variant<cones::Orthant, cones::Lorentz, cones::Monotone,
                   cones::MonotoneNonneg, cones::FinitelyGenerated,
                   cones::HalfspaceIntersection, cones::Dual>;

  static Cone Orthant(Index dim);
  static Cone Lorentz(Index dim);
  static Cone Monotone(Index dim,
                       Direction direction = Direction::kNonincreasing);
  static Cone MonotoneNonneg(Index dim,
                             Direction direction = Direction::kNonincreasing);
  // Generators are the columns of `generators`.
  static Cone FinitelyGenerated(Matrix generators);
  static Cone FinitelyGenerated(const std::vector<Vector>& generators);
  // Normals are the columns of `normals`.
  static Cone HalfspaceIntersection(Matrix normals);
  static Cone HalfspaceIntersection(const std::vector<Vector>& normals);
  // Unsimplified dual wrapper. Most callers want conelab::Dual() instead.
  static Cone DualOf(Cone inner);

  Index dim() const { return dim_; }
  const Variant& variant() const { return rep_; }

  template <typename T>
  const T* get_if() const {
    return std::get_if<T>(&rep_);
  }

  // Short human-readable form, e.g. "lorentz(3)" or "dual(generated(2x2))".
  std::string Describe() const;

  // Structural equality (same variant, same numbers).
  friend bool operator==(const Cone& a, const Cone& b);

 private:
  Cone(Variant rep, Index dim) : rep_(std::move(rep)), dim_(dim) {}

  Variant rep_;
  Index dim_;
};

// Symbolic dual cone. Rewrites: orthant and Lorentz are self-dual; generated
// and halfspace forms swap; monotone becomes the cone generated by the
// consecutive-difference vectors; Dual{K} collapses to K. Anything else is
// wrapped in Dual{}.
Cone Dual(const Cone& cone);

// The matrix whose columns are the consecutive-difference vectors
// e_i - e_{i+1} (nonincreasing) or e_{i+1} - e_i (nondecreasing).
Matrix MonotoneDifferenceVectors(Index dim, Direction direction);

// |x - P_K x|.
double Distance(const Vector& x, const Cone& cone, const Tolerance& tol = {});

// Distance(x, K) / max(1, |x|).
double RelativeDistance(const Vector& x, const Cone& cone,
                        const Tolerance& tol = {});

// True iff |x - P_K x| <= membership_tol * max(1, |x|).
bool Contains(const Cone& cone, const Vector& x, const Tolerance& tol = {});

// x <=_K y, i.e. y - x in K.
bool Leq(const Vector& x, const Vector& y, const Cone& cone,
         const Tolerance& tol = {});

// x and y are comparable when x <=_K y or y <=_K x.
bool Comparable(const Vector& x, const Vector& y, const Cone& cone,
                const Tolerance& tol = {});

}  // namespace conelab

#endif  // CONELAB_CONE_H_
