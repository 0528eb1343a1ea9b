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

#ifndef CONELAB_SAMPLING_H_
#define CONELAB_SAMPLING_H_

#include <cstdint>
#include <random>

#include "conelab/cone.h"
#include "conelab/types.h"

namespace conelab {

// Random stream for one sample of a randomized check. Streams are keyed by
// (seed, stream tag, sample index) so that the draws of sample i never depend
// on how samples are distributed over workers.
class SampleRng {
 public:
  SampleRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);
  explicit SampleRng(std::uint64_t seed) : SampleRng(seed, 0, 0) {}

  double Gaussian();
  Vector Gaussian(Index dim);
  double Uniform(double lo, double hi);
  bool Bernoulli(double p);

  // 10^U(-2, 2).
  double LogUniformRadius();

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

// Standard gaussian vector scaled by LogUniformRadius().
Vector FalsifierPoint(Index dim, SampleRng& rng);

// A random point of the cone at unit-ish scale:
//   orthant         |gaussian|
//   Lorentz         (u, |u| + |s|)
//   monotone        sorted gaussians (sorted |gaussians| for the nonneg form)
//   generated       conic combination with |gaussian| weights, each weight
//                   zeroed with probability 1/2 to reach lower-dimensional
//                   faces (at least one stays nonzero)
//   halfspaces/dual projection of a gaussian onto the cone
Vector SampleFromCone(const Cone& cone, SampleRng& rng,
                      const Tolerance& tol = {});

}  // namespace conelab

#endif  // CONELAB_SAMPLING_H_
