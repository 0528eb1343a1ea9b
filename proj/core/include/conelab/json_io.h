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

#ifndef CONELAB_JSON_IO_H_
#define CONELAB_JSON_IO_H_

#include <nlohmann/json.hpp>

#include "conelab/cone.h"
#include "conelab/errors.h"
#include "conelab/ncp.h"
#include "conelab/projection.h"
#include "conelab/report.h"

namespace conelab::json {

using Json = nlohmann::ordered_json;

// Thrown for documents that parse but do not match the expected schema.
class SchemaError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

Json VectorToJson(const Vector& v);
Vector VectorFromJson(const Json& j);

// {"type":"orthant","dim":n} | {"type":"lorentz","dim":n} |
// {"type":"monotone","dim":n,"direction":"nonincreasing"|"nondecreasing"} |
// {"type":"monotone_nonneg",...} |
// {"type":"generated","dim":n,"generators":[[...],...]} |
// {"type":"halfspaces","dim":n,"normals":[[...],...]} |
// {"type":"dual","inner":{...}}
Json ConeToJson(const Cone& cone);
Cone ConeFromJson(const Json& j);

Json ProjectionToJson(const ProjectionResult& r);
Json MoreauToJson(const MoreauSplit& s);
Json ReportToJson(const PropertyReport& r);

// {"cone":{...},"f":{"type":"affine","M":[[...]],"q":[...]},"step":1.0,
//  "x0":[...]}. step and x0 are optional (1.0 and the zero vector).
struct NcpInput {
  NcpProblem problem;
  Vector x0;
};
NcpInput NcpInputFromJson(const Json& j);
Json NcpSolutionToJson(const NcpSolution& s, double step);

// One entry per descriptor variant: type tag, field schema and an example.
Json DescriptorCatalog();

}  // namespace conelab::json

#endif  // CONELAB_JSON_IO_H_
