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

#ifndef CONELAB_PROPERTIES_H_
#define CONELAB_PROPERTIES_H_

#include "conelab/cone.h"
#include "conelab/lattice.h"
#include "conelab/report.h"

namespace conelab {

// Randomized falsifiers for order properties of metric projections.
//
// Every check draws its points from per-sample streams keyed by
// (config.seed, index), so reports are reproducible and independent of
// config.workers. Gaussian points are scaled by a log-uniform radius in
// [1e-2, 1e2]. A membership z in K fails when
// dist(z, K) > membership_tol * max(1, |z|).

// P_C is K-isotone: u <=_K v implies P_C u <=_K P_C v. Samples u gaussian,
// k from K, v = u + k, and tests P_C v - P_C u in K.
PropertyReport CheckIsotone(const Cone& projector, const Cone& order,
                            const CheckConfig& config);

// P_C is K-subadditive: P_C u + P_C v - P_C(u + v) in K for gaussian u, v.
PropertyReport CheckSubadditive(const Cone& projector, const Cone& order,
                                const CheckConfig& config);

// P_K is L-subadditive, L = Dual(K). Holds whenever P_K is K-isotone.
PropertyReport CheckCrossSubadditive(const Cone& cone,
                                     const CheckConfig& config);

// P_K is K-isotone iff P_L is L-subadditive, L = Dual(K). Runs
// CheckIsotone(K, K) with config.samples and CheckSubadditive(L, L) with four
// times as many; the duality verdict is unfalsified when the two sub-verdicts
// agree.
PropertyReport CheckDuality(const Cone& cone, const CheckConfig& config);

// Recomputes the violation recorded in a falsified report from the witness
// inputs alone, using `tol` for every projection. Returns the relative
// distance of the failing vector. Supports isotone, subadditive and
// invariance reports.
double ReevaluateWitness(const PropertyReport& report, const Cone& projector,
                         const Cone& order, const Tolerance& tol);

}  // namespace conelab

#endif  // CONELAB_PROPERTIES_H_
