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

#include "conelab/catalog.h"
#include "conelab/errors.h"
#include "conelab/projection.h"
#include "conelab/properties.h"
#include "conelab/sampling.h"
#include "gtest/gtest.h"
#include "oracles/oracles.h"

namespace conelab {
namespace {

Vector Vec(std::initializer_list<double> v) {
  Vector out(static_cast<Index>(v.size()));
  Index i = 0;
  for (double d : v) out(i++) = d;
  return out;
}

Cone Acute() {
  Matrix g(2, 2);
  g << 1, 1,  //
      0, 1;
  return Cone::FinitelyGenerated(g);
}

Cone Obtuse() {
  Matrix g(2, 2);
  g << 1, -1,  //
      0, 1;
  return Cone::FinitelyGenerated(g);
}

TEST(LatticeOpTest, OrthantMeetAndJoin) {
  const Cone k = Cone::Orthant(2);
  const Vector x = Vec({3, 1});
  const Vector y = Vec({2, 4});
  // P_{x-K} y = x - max(x - y, 0) and P_{x+K} y = x + max(y - x, 0).
  EXPECT_EQ(LatticeOp(OpKind::kMeetK, x, y, k), Vec({2, 1}));
  EXPECT_EQ(LatticeOp(OpKind::kJoinK, x, y, k), Vec({3, 4}));
  EXPECT_EQ(LatticeOp(OpKind::kMeetL, x, y, k), Vec({2, 1}));
  EXPECT_EQ(LatticeOp(OpKind::kJoinL, x, y, k), Vec({3, 4}));
}

TEST(LatticeOpTest, ApexIdentity) {
  for (const auto& [name, cone] : ProjectionCatalog()) {
    for (std::uint64_t i = 0; i < 50; ++i) {
      SampleRng rng(20, 0, i);
      const Vector x = FalsifierPoint(cone.dim(), rng);
      for (OpKind kind : kAllOpKinds) {
        EXPECT_LE((LatticeOp(kind, x, x, cone) - x).norm(), 1e-9 * Scale(x))
            << name << " " << OpKindName(kind);
      }
    }
  }
}

TEST(LatticeOpTest, OrthantCoincidesWithMinMax) {
  for (Index n = 1; n <= 6; ++n) {
    const Cone k = Cone::Orthant(n);
    for (std::uint64_t i = 0; i < 500; ++i) {
      SampleRng rng(21, static_cast<std::uint64_t>(n), i);
      const Vector x = FalsifierPoint(n, rng);
      const Vector y = FalsifierPoint(n, rng);
      const Vector lo = x.cwiseMin(y);
      const Vector hi = x.cwiseMax(y);
      EXPECT_LE((LatticeOp(OpKind::kMeetK, x, y, k) - lo).norm(), 1e-8);
      EXPECT_LE((LatticeOp(OpKind::kMeetL, x, y, k) - lo).norm(), 1e-8);
      EXPECT_LE((LatticeOp(OpKind::kJoinK, x, y, k) - hi).norm(), 1e-8);
      EXPECT_LE((LatticeOp(OpKind::kJoinL, x, y, k) - hi).norm(), 1e-8);
    }
  }
}

TEST(LatticeOpTest, SelfDualConesCollapseKAndLVariants) {
  for (const Cone& k : {Cone::Orthant(3), Cone::Lorentz(3), Cone::Lorentz(5)}) {
    for (std::uint64_t i = 0; i < 200; ++i) {
      SampleRng rng(22, 0, i);
      const Vector x = rng.Gaussian(k.dim());
      const Vector y = rng.Gaussian(k.dim());
      EXPECT_LE((LatticeOp(OpKind::kMeetK, x, y, k) -
                 LatticeOp(OpKind::kMeetL, x, y, k))
                    .norm(),
                1e-8);
      EXPECT_LE((LatticeOp(OpKind::kJoinK, x, y, k) -
                 LatticeOp(OpKind::kJoinL, x, y, k))
                    .norm(),
                1e-8);
    }
  }
}

TEST(LatticeOpTest, NonSelfDualConeHasDistinctVariants) {
  const Cone k = Cone::Monotone(3);
  const Vector x = Vec({0, 0, 0});
  const Vector y = Vec({1, 2, 3});
  EXPECT_GT((LatticeOp(OpKind::kMeetK, x, y, k) -
             LatticeOp(OpKind::kMeetL, x, y, k))
                .norm(),
            1e-3);
}

TEST(LatticeOpTest, DimensionMismatch) {
  EXPECT_THROW(LatticeOp(OpKind::kMeetK, Vec({1, 2}), Vec({1, 2, 3}),
                         Cone::Orthant(2)),
               DimensionMismatch);
}

CheckConfig Config(long samples, std::uint64_t seed) {
  CheckConfig c;
  c.samples = samples;
  c.seed = seed;
  return c;
}

TEST(InvarianceTest, OrthantIsInvariant) {
  const PropertyReport r =
      CheckInvariance(Cone::Orthant(3), Cone::Orthant(3), Config(2000, 1));
  EXPECT_EQ(r.verdict, Verdict::kUnfalsified);
  EXPECT_FALSE(r.witness.has_value());
  EXPECT_LE(r.max_violation, r.membership_tol);
  EXPECT_EQ(r.property, Property::kInvariance);
}

TEST(InvarianceTest, ObtuseGeneratedConeIsNotInvariant) {
  const Cone k = Obtuse();
  const PropertyReport r = CheckInvariance(k, k, Config(2000, 1));
  ASSERT_EQ(r.verdict, Verdict::kFalsified);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_GT(r.max_violation, r.membership_tol);
  // Recompute the failing operation with the exhaustive polyhedral oracle.
  const Witness& w = *r.witness;
  const Vector& x = *w.Find("x");
  const Vector& y = *w.Find("y");
  const Matrix& g = k.get_if<cones::FinitelyGenerated>()->generators;
  Vector result;
  if (w.op == "meet_K") {
    result = x - oracles::EnumerateGeneratedProjection(g, x - y);
  } else if (w.op == "join_K") {
    result = x + oracles::EnumerateGeneratedProjection(g, y - x);
  } else if (w.op == "meet_L") {
    result = x - oracles::EnumerateHalfspaceProjection(g, x - y);
  } else {
    result = x + oracles::EnumerateHalfspaceProjection(g, y - x);
  }
  const Vector back = oracles::EnumerateGeneratedProjection(g, result);
  EXPECT_GT((result - back).norm(), r.membership_tol * Scale(result));
  EXPECT_LE((result - *w.Find("result")).norm(), 1e-9 * Scale(result));
}

TEST(InvarianceTest, AcuteGeneratedConeIsInvariant) {
  // The 45-degree cone has an isotone projection, so it is invariant.
  const Cone k = Acute();
  EXPECT_EQ(CheckInvariance(k, k, Config(5000, 3)).verdict,
            Verdict::kUnfalsified);
  EXPECT_EQ(CheckIsotone(k, k, Config(5000, 3)).verdict, Verdict::kUnfalsified);
}

TEST(InvarianceTest, DiagonalPairsNeverFalsify) {
  // x == y: every operation returns x, which lies in the set.
  for (const auto& [name, cone] : ProjectionCatalog()) {
    for (std::uint64_t i = 0; i < 50; ++i) {
      SampleRng rng(23, 0, i);
      const Vector x = SampleFromCone(cone, rng);
      for (OpKind kind : kAllOpKinds) {
        EXPECT_TRUE(Contains(cone, LatticeOp(kind, x, x, cone))) << name;
      }
    }
  }
}

TEST(InvarianceTest, WitnessSurvivesTighterSolverTolerance) {
  const Cone k = Cone::Lorentz(3);
  const CheckConfig config = Config(2000, 9);
  const PropertyReport r = CheckInvariance(k, k, config);
  ASSERT_TRUE(r.falsified());
  const double v = ReevaluateWitness(r, k, k, config.tol.Tightened(10));
  EXPECT_GT(v, config.tol.membership_tol / 2);
}

// Invariance of C under the operations of K
// agrees with K-isotonicity of P_C.
struct Pair {
  const char* name;
  Cone set;
  Cone order;
};

TEST(InvarianceTest, AgreesWithIsotonicity) {
  const std::vector<Pair> pairs = {
      {"orthant3/orthant3", Cone::Orthant(3), Cone::Orthant(3)},
      {"lorentz3/lorentz3", Cone::Lorentz(3), Cone::Lorentz(3)},
      {"monotone4/monotone4", Cone::Monotone(4), Cone::Monotone(4)},
      {"mnn4/mnn4", Cone::MonotoneNonneg(4), Cone::MonotoneNonneg(4)},
      {"acute/acute", Acute(), Acute()},
      {"obtuse/obtuse", Obtuse(), Obtuse()},
      {"monotone4/orthant4", Cone::Monotone(4), Cone::Orthant(4)},
      {"orthant2/monotone2", Cone::Orthant(2), Cone::Monotone(2)},
      {"lorentz3/orthant3", Cone::Lorentz(3), Cone::Orthant(3)},
  };
  for (const Pair& p : pairs) {
    const CheckConfig config = Config(2000, 5);
    const PropertyReport inv = CheckInvariance(p.set, p.order, config);
    const PropertyReport iso = CheckIsotone(p.set, p.order, config);
    EXPECT_EQ(inv.verdict, iso.verdict) << p.name;
  }
}

}  // namespace
}  // namespace conelab
