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

#include "conelab/json_io.h"

#include <string>
#include <utility>
#include <vector>

#include "conelab/errors.h"

namespace conelab::json {
namespace {

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object()) throw SchemaError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) {
    throw SchemaError(std::string("missing field '") + key + "'");
  }
  return *it;
}

Index DimField(const Json& j) {
  const Json& d = Field(j, "dim");
  if (!d.is_number_integer() || d.get<long long>() < 1) {
    throw SchemaError("'dim' must be a positive integer");
  }
  return static_cast<Index>(d.get<long long>());
}

Direction DirectionField(const Json& j) {
  auto it = j.find("direction");
  if (it == j.end()) return Direction::kNonincreasing;
  if (!it->is_string()) throw SchemaError("'direction' must be a string");
  const auto s = it->get<std::string>();
  if (s == "nonincreasing") return Direction::kNonincreasing;
  if (s == "nondecreasing") return Direction::kNondecreasing;
  throw SchemaError("'direction' must be nonincreasing or nondecreasing");
}

Matrix ColumnsField(const Json& j, const char* key, Index dim) {
  const Json& list = Field(j, key);
  if (!list.is_array() || list.empty()) {
    throw SchemaError(std::string("'") + key + "' must be a nonempty array");
  }
  Matrix m(dim, static_cast<Index>(list.size()));
  for (std::size_t k = 0; k < list.size(); ++k) {
    const Vector v = VectorFromJson(list[k]);
    if (v.size() != dim) {
      throw DimensionMismatch(std::string("'") + key + "' entry " +
                              std::to_string(k) + " has wrong dimension");
    }
    m.col(static_cast<Index>(k)) = v;
  }
  return m;
}

Json ColumnsToJson(const Matrix& m) {
  Json list = Json::array();
  for (Index j = 0; j < m.cols(); ++j) list.push_back(VectorToJson(m.col(j)));
  return list;
}

Matrix MatrixFromJson(const Json& j, Index dim) {
  if (!j.is_array() || static_cast<Index>(j.size()) != dim) {
    throw SchemaError("'M' must be an array of " + std::to_string(dim) +
                      " rows");
  }
  Matrix m(dim, dim);
  for (Index r = 0; r < dim; ++r) {
    const Vector row = VectorFromJson(j[static_cast<std::size_t>(r)]);
    if (row.size() != dim) throw DimensionMismatch("'M' row has wrong length");
    m.row(r) = row.transpose();
  }
  return m;
}

}  // namespace

Json VectorToJson(const Vector& v) {
  Json a = Json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

Vector VectorFromJson(const Json& j) {
  if (!j.is_array()) throw SchemaError("vector must be a JSON array");
  Vector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw SchemaError("vector entries must be numbers");
    v(static_cast<Index>(i)) = j[i].get<double>();
  }
  RequireFinite(v, "vector");
  return v;
}

Json ConeToJson(const Cone& cone) {
  return std::visit(
      [&](const auto& c) -> Json {
        using T = std::decay_t<decltype(c)>;
        Json j;
        if constexpr (std::is_same_v<T, cones::Orthant>) {
          j["type"] = "orthant";
          j["dim"] = c.dim;
        } else if constexpr (std::is_same_v<T, cones::Lorentz>) {
          j["type"] = "lorentz";
          j["dim"] = c.dim;
        } else if constexpr (std::is_same_v<T, cones::Monotone> ||
                             std::is_same_v<T, cones::MonotoneNonneg>) {
          j["type"] = std::is_same_v<T, cones::Monotone> ? "monotone"
                                                         : "monotone_nonneg";
          j["dim"] = c.dim;
          j["direction"] = std::string(DirectionName(c.direction));
        } else if constexpr (std::is_same_v<T, cones::FinitelyGenerated>) {
          j["type"] = "generated";
          j["dim"] = c.generators.rows();
          j["generators"] = ColumnsToJson(c.generators);
        } else if constexpr (std::is_same_v<T, cones::HalfspaceIntersection>) {
          j["type"] = "halfspaces";
          j["dim"] = c.normals.rows();
          j["normals"] = ColumnsToJson(c.normals);
        } else {
          j["type"] = "dual";
          j["inner"] = ConeToJson(*c.inner);
        }
        return j;
      },
      cone.variant());
}

Cone ConeFromJson(const Json& j) {
  const Json& type = Field(j, "type");
  if (!type.is_string()) throw SchemaError("'type' must be a string");
  const auto t = type.get<std::string>();
  if (t == "orthant") return Cone::Orthant(DimField(j));
  if (t == "lorentz") return Cone::Lorentz(DimField(j));
  if (t == "monotone") return Cone::Monotone(DimField(j), DirectionField(j));
  if (t == "monotone_nonneg") {
    return Cone::MonotoneNonneg(DimField(j), DirectionField(j));
  }
  if (t == "generated") {
    return Cone::FinitelyGenerated(
        ColumnsField(j, "generators", DimField(j)));
  }
  if (t == "halfspaces") {
    return Cone::HalfspaceIntersection(ColumnsField(j, "normals", DimField(j)));
  }
  if (t == "dual") return Cone::DualOf(ConeFromJson(Field(j, "inner")));
  throw SchemaError("unknown cone type '" + t + "'");
}

Json ProjectionToJson(const ProjectionResult& r) {
  Json j;
  j["point"] = VectorToJson(r.point);
  j["iterations"] = r.iterations;
  j["residual"] = r.residual;
  j["method"] = std::string(MethodName(r.method));
  return j;
}

Json MoreauToJson(const MoreauSplit& s) {
  Json j;
  j["p"] = VectorToJson(s.p);
  j["q"] = VectorToJson(s.q);
  j["reconstruction_error"] = s.reconstruction_error;
  j["inner_product"] = s.inner_product;
  return j;
}

Json ReportToJson(const PropertyReport& r) {
  Json j;
  j["property"] = std::string(PropertyName(r.property));
  j["verdict"] = std::string(VerdictName(r.verdict));
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["max_violation"] = r.max_violation;
  j["membership_tol"] = r.membership_tol;
  j["projector"] = r.projector;
  j["order"] = r.order;
  if (r.witness) {
    Json w;
    w["sample_index"] = r.witness->sample_index;
    if (!r.witness->op.empty()) w["op"] = r.witness->op;
    for (const auto& [name, v] : r.witness->vectors) w[name] = VectorToJson(v);
    w["distance"] = r.witness->distance;
    w["violation"] = r.witness->violation;
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  j["note"] = r.note;
  if (!r.components.empty()) {
    Json parts = Json::array();
    for (const auto& c : r.components) parts.push_back(ReportToJson(c));
    j["components"] = std::move(parts);
  }
  return j;
}

NcpInput NcpInputFromJson(const Json& j) {
  Cone cone = ConeFromJson(Field(j, "cone"));
  const Index dim = cone.dim();
  const Json& f = Field(j, "f");
  const Json& ftype = Field(f, "type");
  if (!ftype.is_string() || ftype.get<std::string>() != "affine") {
    throw SchemaError("'f.type' must be \"affine\"");
  }
  AffineMap affine{MatrixFromJson(Field(f, "M"), dim),
                   VectorFromJson(Field(f, "q"))};
  if (affine.q.size() != dim) throw DimensionMismatch("'q' has wrong length");

  double step = 1.0;
  if (auto it = j.find("step"); it != j.end()) {
    if (!it->is_number()) throw SchemaError("'step' must be a number");
    step = it->get<double>();
  }
  Vector x0 = Vector::Zero(dim);
  if (auto it = j.find("x0"); it != j.end()) x0 = VectorFromJson(*it);

  NcpInput in{NcpProblem{std::move(cone), std::move(affine), step},
              std::move(x0)};
  in.problem.Validate();
  RequireDim(in.x0, dim, "x0");
  return in;
}

Json NcpSolutionToJson(const NcpSolution& s, double step) {
  Json j;
  j["x"] = VectorToJson(s.x);
  j["iterations"] = s.iterations;
  j["step"] = step;
  j["fixed_point_residual"] = s.residuals.fixed_point_residual;
  j["complementarity_gap"] = s.residuals.complementarity_gap;
  j["primal_dist"] = s.residuals.primal_dist;
  j["dual_dist"] = s.residuals.dual_dist;
  j["converged"] = s.residuals.converged;
  return j;
}

Json DescriptorCatalog() {
  auto entry = [](const char* type, Json fields, const Cone& example) {
    Json e;
    e["type"] = type;
    e["fields"] = std::move(fields);
    e["example"] = ConeToJson(example);
    return e;
  };
  const Json dim_only = {{"dim", "positive integer"}};
  const Json monotone = {
      {"dim", "integer >= 2"},
      {"direction", "\"nonincreasing\" | \"nondecreasing\" (default nonincreasing)"}};
  Json list = Json::array();
  list.push_back(entry("orthant", dim_only, Cone::Orthant(3)));
  list.push_back(entry("lorentz", {{"dim", "integer >= 2"}}, Cone::Lorentz(3)));
  list.push_back(entry("monotone", monotone, Cone::Monotone(3)));
  list.push_back(entry("monotone_nonneg",
                       {{"dim", "positive integer"},
                        {"direction", monotone["direction"]}},
                       Cone::MonotoneNonneg(3, Direction::kNondecreasing)));
  Matrix g(2, 2);
  g << 1, 1, 0, 1;
  list.push_back(entry(
      "generated",
      {{"dim", "positive integer"},
       {"generators", "nonempty array of nonzero vectors of length dim"}},
      Cone::FinitelyGenerated(g)));
  list.push_back(entry(
      "halfspaces",
      {{"dim", "positive integer"},
       {"normals", "nonempty array of nonzero vectors of length dim"}},
      Cone::HalfspaceIntersection(g)));
  list.push_back(entry("dual", {{"inner", "cone descriptor"}},
                       Cone::DualOf(Cone::MonotoneNonneg(3))));
  Json j;
  j["variants"] = std::move(list);
  return j;
}

}  // namespace conelab::json
