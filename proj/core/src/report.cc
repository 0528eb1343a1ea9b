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

#include "conelab/report.h"

namespace conelab {

std::string_view PropertyName(Property p) {
  switch (p) {
    case Property::kIsotone:
      return "isotone";
    case Property::kSubadditive:
      return "subadditive";
    case Property::kInvariance:
      return "invariance";
    case Property::kDuality:
      return "duality";
  }
  return "unknown";
}

std::string_view VerdictName(Verdict v) {
  return v == Verdict::kFalsified ? "falsified" : "unfalsified";
}

const Vector* Witness::Find(std::string_view name) const {
  for (const auto& [key, value] : vectors) {
    if (key == name) return &value;
  }
  return nullptr;
}

}  // namespace conelab
