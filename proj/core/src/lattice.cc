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

#include "conelab/lattice.h"

#include <sstream>
#include <string>

#include "conelab/errors.h"
#include "conelab/projection.h"
#include "conelab/sampling.h"
#include "sample_runner.h"

namespace conelab {

std::string_view OpKindName(OpKind kind) {
  switch (kind) {
    case OpKind::kMeetK:
      return "meet_K";
    case OpKind::kJoinK:
      return "join_K";
    case OpKind::kMeetL:
      return "meet_L";
    case OpKind::kJoinL:
      return "join_L";
  }
  return "unknown";
}

namespace {

Vector ApplyOp(OpKind kind, const Vector& x, const Vector& y, const Cone& k,
               const Cone& l, const Tolerance& tol) {
  switch (kind) {
    case OpKind::kMeetK:
      return ProjectTranslated(x, k, Sign::kMinus, y, tol);
    case OpKind::kJoinK:
      return ProjectTranslated(x, k, Sign::kPlus, y, tol);
    case OpKind::kMeetL:
      return ProjectTranslated(x, l, Sign::kMinus, y, tol);
    case OpKind::kJoinL:
      return ProjectTranslated(x, l, Sign::kPlus, y, tol);
  }
  throw InvalidArgument("unknown lattice operation");
}

}  // namespace

Vector LatticeOp(OpKind kind, const Vector& x, const Vector& y,
                 const Cone& cone, const Tolerance& tol) {
  RequireDim(x, cone.dim(), "lattice_op");
  RequireDim(y, cone.dim(), "lattice_op");
  if (kind == OpKind::kMeetK || kind == OpKind::kJoinK) {
    return ApplyOp(kind, x, y, cone, cone, tol);
  }
  return ApplyOp(kind, x, y, cone, Dual(cone), tol);
}

PropertyReport CheckInvariance(const Cone& set, const Cone& order,
                               const CheckConfig& config) {
  if (set.dim() != order.dim()) {
    throw DimensionMismatch("check_invariance: set and order cone differ in dim");
  }
  if (config.samples < 0) throw InvalidArgument("samples must be >= 0");
  config.tol.Validate();
  const Cone dual = Dual(order);
  const Tolerance& tol = config.tol;

  auto eval = [&](long i) {
    SampleRng rng(config.seed, /*stream=*/3, static_cast<std::uint64_t>(i));
    const Vector x = rng.LogUniformRadius() * SampleFromCone(set, rng, tol);
    const Vector y = rng.LogUniformRadius() * SampleFromCone(set, rng, tol);
    internal::SampleOutcome out;
    for (OpKind kind : kAllOpKinds) {
      const Vector r = ApplyOp(kind, x, y, order, dual, tol);
      const double dist = Distance(r, set, tol);
      const double violation = dist / Scale(r);
      out.violation = std::max(out.violation, violation);
      if (violation > tol.membership_tol && !out.witness) {
        Witness w;
        w.sample_index = i;
        w.op = std::string(OpKindName(kind));
        w.vectors = {{"x", x}, {"y", y}, {"result", r}};
        w.distance = dist;
        w.violation = violation;
        out.witness = std::move(w);
      }
    }
    return out;
  };

  internal::SampleSummary summary =
      internal::RunSamples(config.samples, config.workers, eval);
  PropertyReport report;
  report.property = Property::kInvariance;
  report.samples = config.samples;
  report.seed = config.seed;
  report.membership_tol = tol.membership_tol;
  report.max_violation = summary.max_violation;
  report.witness = std::move(summary.first_witness);
  report.verdict =
      report.witness ? Verdict::kFalsified : Verdict::kUnfalsified;
  report.projector = set.Describe();
  report.order = order.Describe();
  report.note = report.falsified()
                    ? "set is not invariant under the lattice-like operations"
                    : "sampled evidence, not a proof";
  return report;
}

}  // namespace conelab
