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

#ifndef CONELAB_REPORT_H_
#define CONELAB_REPORT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "conelab/types.h"

namespace conelab {

enum class Property { kIsotone, kSubadditive, kInvariance, kDuality };
enum class Verdict { kUnfalsified, kFalsified };

std::string_view PropertyName(Property p);
std::string_view VerdictName(Verdict v);

// The first falsifying sample (lowest index) of a randomized check.
struct Witness {
  long sample_index = 0;
  // Lattice operation for invariance witnesses; empty otherwise.
  std::string op;
  // Inputs first ("u", "v" or "x", "y"), then intermediates, then the vector
  // whose membership failed.
  std::vector<std::pair<std::string, Vector>> vectors;
  double distance = 0.0;   // |z - P z| for the failing vector z
  double violation = 0.0;  // distance / max(1, |z|)

  const Vector* Find(std::string_view name) const;
};

// Outcome of a randomized property check.
//
// verdict == kFalsified  <=>  witness present  <=>  max_violation >
// membership_tol. max_violation is the largest relative distance
// dist(z, K) / max(1, |z|) over every membership tested. An unfalsified
// verdict is sampled evidence, not a proof.
struct PropertyReport {
  Property property = Property::kIsotone;
  Verdict verdict = Verdict::kUnfalsified;
  long samples = 0;
  std::uint64_t seed = 0;
  double max_violation = 0.0;
  double membership_tol = 0.0;
  std::optional<Witness> witness;
  // Set whose projection is tested (or whose invariance is tested), and the
  // cone defining the order.
  std::string projector;
  std::string order;
  std::string note;
  // Duality reports embed the isotone and subadditive sub-reports, in that
  // order.
  std::vector<PropertyReport> components;

  bool falsified() const { return verdict == Verdict::kFalsified; }
};

}  // namespace conelab

#endif  // CONELAB_REPORT_H_
