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

#ifndef CONELAB_LATTICE_H_
#define CONELAB_LATTICE_H_

#include <array>
#include <cstdint>
#include <string_view>

#include "conelab/cone.h"
#include "conelab/report.h"
#include "conelab/types.h"

namespace conelab {

// The four lattice-like operations attached to a cone K and its dual L:
//   meet_K(x, y) = P_{x-K} y      join_K(x, y) = P_{x+K} y
//   meet_L(x, y) = P_{x-L} y      join_L(x, y) = P_{x+L} y
// For a self-dual latticial cone (the orthant) they reduce to componentwise
// min and max.
enum class OpKind { kMeetK, kJoinK, kMeetL, kJoinL };

inline constexpr std::array<OpKind, 4> kAllOpKinds = {
    OpKind::kMeetK, OpKind::kJoinK, OpKind::kMeetL, OpKind::kJoinL};

std::string_view OpKindName(OpKind kind);

Vector LatticeOp(OpKind kind, const Vector& x, const Vector& y,
                 const Cone& cone, const Tolerance& tol = {});

struct CheckConfig {
  long samples = 1000;
  std::uint64_t seed = 0;
  Tolerance tol;
  // Sample evaluation may be split across threads; the report does not
  // depend on this value.
  int workers = 1;
};

// Samples pairs (x, y) from `set`, applies all four operations of `order`,
// and reports whether any result leaves `set`. A closed convex set is
// K-invariant exactly when its projection is K-isotone, so the verdict should
// agree with CheckIsotone(set, order, ...).
PropertyReport CheckInvariance(const Cone& set, const Cone& order,
                               const CheckConfig& config);

}  // namespace conelab

#endif  // CONELAB_LATTICE_H_
