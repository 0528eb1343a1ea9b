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

#include "conelab/catalog.h"
#include "conelab/errors.h"
#include "conelab/projection.h"
#include "gtest/gtest.h"

namespace conelab {
namespace {

CheckConfig Config(long samples, std::uint64_t seed, int workers = 1) {
  CheckConfig c;
  c.samples = samples;
  c.seed = seed;
  c.workers = workers;
  return c;
}

void ExpectConsistent(const PropertyReport& r) {
  EXPECT_EQ(r.falsified(), r.witness.has_value());
  if (r.property != Property::kDuality) {
    EXPECT_EQ(r.falsified(), r.max_violation > r.membership_tol);
  }
}

void ExpectSameReport(const PropertyReport& a, const PropertyReport& b) {
  EXPECT_EQ(a.verdict, b.verdict);
  EXPECT_EQ(a.max_violation, b.max_violation);
  ASSERT_EQ(a.witness.has_value(), b.witness.has_value());
  if (a.witness) {
    EXPECT_EQ(a.witness->sample_index, b.witness->sample_index);
    ASSERT_EQ(a.witness->vectors.size(), b.witness->vectors.size());
    for (std::size_t i = 0; i < a.witness->vectors.size(); ++i) {
      EXPECT_EQ(a.witness->vectors[i].second, b.witness->vectors[i].second);
    }
  }
}

TEST(IsotoneTest, OrthantUnfalsified) {
  for (Index n = 2; n <= 5; ++n) {
    const Cone k = Cone::Orthant(n);
    const PropertyReport r = CheckIsotone(k, k, Config(3000, 1));
    EXPECT_EQ(r.verdict, Verdict::kUnfalsified);
    ExpectConsistent(r);
  }
}

TEST(IsotoneTest, LorentzFalsifiedWithReverifiableWitness) {
  const Cone k = Cone::Lorentz(3);
  const CheckConfig config = Config(10000, 7);
  const PropertyReport r = CheckIsotone(k, k, config);
  ASSERT_EQ(r.verdict, Verdict::kFalsified);
  ExpectConsistent(r);
  // v - u lies in K by construction.
  const Witness& w = *r.witness;
  EXPECT_TRUE(Leq(*w.Find("u"), *w.Find("v"), k));
  EXPECT_GT(ReevaluateWitness(r, k, k, config.tol.Tightened(10)),
            config.tol.membership_tol / 2);
}

TEST(IsotoneTest, MonotoneUnfalsified) {
  const Cone k = Cone::Monotone(3);
  EXPECT_EQ(CheckIsotone(k, k, Config(10000, 2)).verdict,
            Verdict::kUnfalsified);
}

TEST(SubadditiveTest, OrthantUnfalsified) {
  const Cone k = Cone::Orthant(4);
  const PropertyReport r = CheckSubadditive(k, k, Config(5000, 1));
  EXPECT_EQ(r.verdict, Verdict::kUnfalsified);
  ExpectConsistent(r);
}

TEST(SubadditiveTest, LorentzFalsifiedWithReverifiableWitness) {
  const Cone k = Cone::Lorentz(3);
  const CheckConfig config = Config(10000, 7);
  const PropertyReport r = CheckSubadditive(k, k, config);
  ASSERT_EQ(r.verdict, Verdict::kFalsified);
  ExpectConsistent(r);
  EXPECT_GT(ReevaluateWitness(r, k, k, config.tol.Tightened(10)),
            config.tol.membership_tol / 2);
}

TEST(SubadditiveTest, ZeroSamplesAreUnfalsified) {
  const Cone k = Cone::Lorentz(3);
  const PropertyReport r = CheckSubadditive(k, k, Config(0, 7));
  EXPECT_EQ(r.verdict, Verdict::kUnfalsified);
  EXPECT_EQ(r.max_violation, 0.0);
}

TEST(SubadditiveTest, ZeroPairHasNoDefect) {
  const Cone k = Cone::Lorentz(3);
  const Vector z = Vector::Zero(3);
  const Vector defect =
      ProjectPoint(z, k) + ProjectPoint(z, k) - ProjectPoint(z + z, k);
  EXPECT_EQ(defect, z);
}

TEST(CrossSubadditiveTest, OrthantUnfalsified) {
  EXPECT_EQ(CheckCrossSubadditive(Cone::Orthant(3), Config(5000, 4)).verdict,
            Verdict::kUnfalsified);
}

TEST(CrossSubadditiveTest, MonotoneUnfalsifiedWhenIsotone) {
  const Cone k = Cone::Monotone(4);
  ASSERT_EQ(CheckIsotone(k, k, Config(5000, 4)).verdict,
            Verdict::kUnfalsified);
  EXPECT_EQ(CheckCrossSubadditive(k, Config(5000, 4)).verdict,
            Verdict::kUnfalsified);
}

TEST(CrossSubadditiveTest, ProofChainHoldsOverCatalog) {
  for (const auto& [name, cone] : DualityCatalog()) {
    const CheckConfig config = Config(2000, 11);
    if (CheckIsotone(cone, cone, config).falsified()) continue;
    EXPECT_EQ(CheckCrossSubadditive(cone, config).verdict,
              Verdict::kUnfalsified)
        << name;
  }
}

TEST(DualityTest, OrthantBothSidesUnfalsified) {
  const PropertyReport r = CheckDuality(Cone::Orthant(4), Config(2000, 3));
  EXPECT_EQ(r.verdict, Verdict::kUnfalsified);
  ASSERT_EQ(r.components.size(), 2u);
  EXPECT_EQ(r.components[0].verdict, Verdict::kUnfalsified);
  EXPECT_EQ(r.components[1].verdict, Verdict::kUnfalsified);
  EXPECT_EQ(r.components[1].samples, 4 * r.components[0].samples);
  ExpectConsistent(r);
}

TEST(DualityTest, LorentzBothSidesFalsified) {
  const PropertyReport r = CheckDuality(Cone::Lorentz(3), Config(10000, 7));
  EXPECT_EQ(r.verdict, Verdict::kUnfalsified);
  ASSERT_EQ(r.components.size(), 2u);
  EXPECT_EQ(r.components[0].property, Property::kIsotone);
  EXPECT_EQ(r.components[1].property, Property::kSubadditive);
  EXPECT_TRUE(r.components[0].falsified());
  EXPECT_TRUE(r.components[1].falsified());
  ExpectConsistent(r);
}

TEST(DualityTest, MonotoneBothSidesUnfalsified) {
  const PropertyReport r = CheckDuality(Cone::Monotone(5), Config(5000, 5));
  EXPECT_EQ(r.verdict, Verdict::kUnfalsified);
  EXPECT_FALSE(r.components[0].falsified());
  EXPECT_FALSE(r.components[1].falsified());
  EXPECT_EQ(r.components[1].projector, "generated(5x4)");
}

TEST(DualityTest, ObtuseGeneratedConeBothSidesFalsified) {
  Matrix g(2, 2);
  g << 1, -1,  //
      0, 1;
  const PropertyReport r =
      CheckDuality(Cone::FinitelyGenerated(g), Config(5000, 5));
  EXPECT_EQ(r.verdict, Verdict::kUnfalsified);
  EXPECT_TRUE(r.components[0].falsified());
  EXPECT_TRUE(r.components[1].falsified());
}

TEST(DeterminismTest, SameSeedSameReport) {
  const Cone k = Cone::Lorentz(4);
  ExpectSameReport(CheckIsotone(k, k, Config(3000, 42)),
                   CheckIsotone(k, k, Config(3000, 42)));
  ExpectSameReport(CheckSubadditive(k, k, Config(3000, 42)),
                   CheckSubadditive(k, k, Config(3000, 42)));
}

TEST(DeterminismTest, WorkerCountDoesNotChangeReport) {
  const Cone k = Cone::Lorentz(3);
  const Cone g = RandomGeneratedCone(3, 4);
  for (int workers : {2, 3, 8}) {
    ExpectSameReport(CheckIsotone(k, k, Config(3000, 8)),
                     CheckIsotone(k, k, Config(3000, 8, workers)));
    ExpectSameReport(CheckSubadditive(Dual(g), Dual(g), Config(1000, 8)),
                     CheckSubadditive(Dual(g), Dual(g), Config(1000, 8, workers)));
    ExpectSameReport(CheckInvariance(k, k, Config(1000, 8)),
                     CheckInvariance(k, k, Config(1000, 8, workers)));
  }
}

TEST(DeterminismTest, DifferentSeedsDrawDifferentSamples) {
  const Cone k = Cone::Lorentz(3);
  const PropertyReport a = CheckIsotone(k, k, Config(2000, 1));
  const PropertyReport b = CheckIsotone(k, k, Config(2000, 2));
  EXPECT_NE(a.max_violation, b.max_violation);
}

TEST(PropertyCheckTest, RejectsMismatchedDims) {
  EXPECT_THROW(CheckIsotone(Cone::Orthant(2), Cone::Orthant(3), Config(1, 1)),
               DimensionMismatch);
  EXPECT_THROW(
      CheckSubadditive(Cone::Orthant(2), Cone::Orthant(3), Config(1, 1)),
      DimensionMismatch);
  EXPECT_THROW(CheckIsotone(Cone::Orthant(2), Cone::Orthant(2), Config(-1, 1)),
               InvalidArgument);
}

}  // namespace
}  // namespace conelab
