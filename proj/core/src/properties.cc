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

#include "conelab/properties.h"

#include <string>
#include <utility>

#include "conelab/errors.h"
#include "conelab/projection.h"
#include "conelab/sampling.h"
#include "sample_runner.h"

namespace conelab {
namespace {

enum Stream : std::uint64_t { kIsotoneStream = 1, kSubadditiveStream = 2 };

void RequireSameDim(const Cone& a, const Cone& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch(std::string(what) +
                            ": projector and order cone differ in dim");
  }
}

void ValidateConfig(const CheckConfig& config) {
  if (config.samples < 0) throw InvalidArgument("samples must be >= 0");
  config.tol.Validate();
}

// Membership test of z in `order`, packaged as a sample outcome.
internal::SampleOutcome Judge(
    long index, const Vector& z, const Cone& order, const Tolerance& tol,
    std::vector<std::pair<std::string, Vector>> vectors) {
  internal::SampleOutcome out;
  const double dist = Distance(z, order, tol);
  out.violation = dist / Scale(z);
  if (out.violation > tol.membership_tol) {
    Witness w;
    w.sample_index = index;
    w.vectors = std::move(vectors);
    w.vectors.emplace_back("difference", z);
    w.distance = dist;
    w.violation = out.violation;
    out.witness = std::move(w);
  }
  return out;
}

PropertyReport Finish(Property property, const CheckConfig& config,
                      const Cone& projector, const Cone& order,
                      internal::SampleSummary summary) {
  PropertyReport r;
  r.property = property;
  r.samples = config.samples;
  r.seed = config.seed;
  r.membership_tol = config.tol.membership_tol;
  r.max_violation = summary.max_violation;
  r.witness = std::move(summary.first_witness);
  r.verdict = r.witness ? Verdict::kFalsified : Verdict::kUnfalsified;
  r.projector = projector.Describe();
  r.order = order.Describe();
  return r;
}

Vector IsotoneDifference(const Vector& u, const Vector& v,
                         const Cone& projector, const Tolerance& tol,
                         Vector* pu, Vector* pv) {
  *pu = ProjectPoint(u, projector, tol);
  *pv = ProjectPoint(v, projector, tol);
  return *pv - *pu;
}

Vector SubadditiveDefect(const Vector& u, const Vector& v,
                         const Cone& projector, const Tolerance& tol,
                         Vector* pu, Vector* pv, Vector* puv) {
  *pu = ProjectPoint(u, projector, tol);
  *pv = ProjectPoint(v, projector, tol);
  *puv = ProjectPoint(u + v, projector, tol);
  return *pu + *pv - *puv;
}

const Vector& RequireVector(const Witness& w, std::string_view name) {
  const Vector* v = w.Find(name);
  if (v == nullptr) {
    throw InvalidArgument("witness lacks vector '" + std::string(name) + "'");
  }
  return *v;
}

}  // namespace

PropertyReport CheckIsotone(const Cone& projector, const Cone& order,
                            const CheckConfig& config) {
  RequireSameDim(projector, order, "check_isotone");
  ValidateConfig(config);
  const Tolerance& tol = config.tol;
  const Index n = projector.dim();

  auto eval = [&](long i) {
    SampleRng rng(config.seed, kIsotoneStream, static_cast<std::uint64_t>(i));
    const Vector u = FalsifierPoint(n, rng);
    const Vector k = rng.LogUniformRadius() * SampleFromCone(order, rng, tol);
    const Vector v = u + k;
    Vector pu, pv;
    const Vector z = IsotoneDifference(u, v, projector, tol, &pu, &pv);
    return Judge(i, z, order, tol,
                 {{"u", u}, {"v", v}, {"k", k}, {"Pu", pu}, {"Pv", pv}});
  };

  PropertyReport r =
      Finish(Property::kIsotone, config, projector, order,
             internal::RunSamples(config.samples, config.workers, eval));
  r.note = r.falsified()
               ? "u <= v in the order cone but P(v) - P(u) leaves it"
               : "sampled evidence, not a proof; for a pointed generating "
                 "cone an isotone projection also forces the cone to be "
                 "latticial (not tested)";
  return r;
}

PropertyReport CheckSubadditive(const Cone& projector, const Cone& order,
                                const CheckConfig& config) {
  RequireSameDim(projector, order, "check_subadditive");
  ValidateConfig(config);
  const Tolerance& tol = config.tol;
  const Index n = projector.dim();

  auto eval = [&](long i) {
    SampleRng rng(config.seed, kSubadditiveStream,
                  static_cast<std::uint64_t>(i));
    const Vector u = FalsifierPoint(n, rng);
    const Vector v = FalsifierPoint(n, rng);
    Vector pu, pv, puv;
    const Vector z = SubadditiveDefect(u, v, projector, tol, &pu, &pv, &puv);
    return Judge(i, z, order, tol,
                 {{"u", u}, {"v", v}, {"Pu", pu}, {"Pv", pv}, {"Puv", puv}});
  };

  PropertyReport r =
      Finish(Property::kSubadditive, config, projector, order,
             internal::RunSamples(config.samples, config.workers, eval));
  r.note = r.falsified() ? "P(u) + P(v) - P(u + v) leaves the order cone"
                         : "sampled evidence, not a proof";
  return r;
}

PropertyReport CheckCrossSubadditive(const Cone& cone,
                                     const CheckConfig& config) {
  return CheckSubadditive(cone, Dual(cone), config);
}

PropertyReport CheckDuality(const Cone& cone, const CheckConfig& config) {
  ValidateConfig(config);
  const Cone dual = Dual(cone);
  CheckConfig sub_config = config;
  sub_config.samples = 4 * config.samples;

  PropertyReport iso = CheckIsotone(cone, cone, config);
  PropertyReport sub = CheckSubadditive(dual, dual, sub_config);

  PropertyReport r;
  r.property = Property::kDuality;
  r.samples = config.samples;
  r.seed = config.seed;
  r.membership_tol = config.tol.membership_tol;
  r.projector = cone.Describe();
  r.order = dual.Describe();
  if (iso.verdict == sub.verdict) {
    r.verdict = Verdict::kUnfalsified;
    r.note = iso.falsified()
                 ? "both sides falsified: consistent with the equivalence"
                 : "both sides unfalsified: consistent with the equivalence";
  } else {
    const PropertyReport& bad = iso.falsified() ? iso : sub;
    r.verdict = Verdict::kFalsified;
    r.max_violation = bad.max_violation;
    r.witness = bad.witness;
    r.witness->op = iso.falsified() ? "isotone_only" : "subadditive_only";
    r.note =
        "sub-verdicts disagree: numerical inconsistency with the "
        "isotone/subadditive equivalence (implementation or tolerance defect)";
  }
  r.components.push_back(std::move(iso));
  r.components.push_back(std::move(sub));
  return r;
}

double ReevaluateWitness(const PropertyReport& report, const Cone& projector,
                         const Cone& order, const Tolerance& tol) {
  if (!report.witness) throw InvalidArgument("report has no witness");
  const Witness& w = *report.witness;
  Vector a, b, c;
  switch (report.property) {
    case Property::kIsotone: {
      const Vector z = IsotoneDifference(RequireVector(w, "u"),
                                         RequireVector(w, "v"), projector,
                                         tol, &a, &b);
      return RelativeDistance(z, order, tol);
    }
    case Property::kSubadditive: {
      const Vector z =
          SubadditiveDefect(RequireVector(w, "u"), RequireVector(w, "v"),
                            projector, tol, &a, &b, &c);
      return RelativeDistance(z, order, tol);
    }
    case Property::kInvariance: {
      OpKind kind = OpKind::kMeetK;
      bool found = false;
      for (OpKind k : kAllOpKinds) {
        if (OpKindName(k) == w.op) {
          kind = k;
          found = true;
        }
      }
      if (!found) throw InvalidArgument("witness has unknown op '" + w.op + "'");
      const Vector r = LatticeOp(kind, RequireVector(w, "x"),
                                 RequireVector(w, "y"), order, tol);
      // For invariance reports `projector` is the tested set.
      return RelativeDistance(r, projector, tol);
    }
    case Property::kDuality:
      break;
  }
  throw InvalidArgument("duality witnesses are re-evaluated via components");
}

}  // namespace conelab
