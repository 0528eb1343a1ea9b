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

#ifndef CONELAB_CATALOG_H_
#define CONELAB_CATALOG_H_

#include <cstdint>
#include <string>
#include <vector>

#include "conelab/cone.h"

namespace conelab {

struct CatalogEntry {
  std::string name;
  Cone cone;
};

// Random pointed cone generated by `dim` unit vectors in R^dim (dim 2 or 3),
// reproducible from `seed`. Generators are rejection-sampled until every
// pair is at least 20 degrees apart and the generator matrix has condition
// number below 50.
Cone RandomGeneratedCone(Index dim, std::uint64_t seed);

// One cone per descriptor variant and direction: orthant, Lorentz, both
// monotone directions, monotone nonneg, a generated cone, a halfspace cone
// and an unrewritable dual.
std::vector<CatalogEntry> ProjectionCatalog();

// Orthant 2-6, Lorentz 3-5, monotone 3-8, monotone nonneg 3-8 and five
// random generated cones in R^2 and R^3.
std::vector<CatalogEntry> DualityCatalog();

}  // namespace conelab

#endif  // CONELAB_CATALOG_H_
