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

#ifndef CONELAB_SRC_SAMPLE_RUNNER_H_
#define CONELAB_SRC_SAMPLE_RUNNER_H_

#include <algorithm>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

#include "conelab/report.h"

namespace conelab::internal {

struct SampleOutcome {
  double violation = 0.0;
  // Present only when violation exceeds the membership tolerance.
  std::optional<Witness> witness;
};

struct SampleSummary {
  double max_violation = 0.0;
  std::optional<Witness> first_witness;
};

// Evaluates samples [0, n) with `eval(index)`, optionally over several
// threads in contiguous chunks. The summary keeps the overall maximum
// violation and the witness with the lowest sample index, so it does not
// depend on the worker count. Exceptions from any worker are rethrown.
template <typename Eval>
SampleSummary RunSamples(long n, int workers, const Eval& eval) {
  workers = std::max(1, std::min<int>(workers, static_cast<int>(
                                                   std::max(1L, n))));
  std::vector<SampleSummary> partial(static_cast<std::size_t>(workers));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));

  auto work = [&](int w) {
    const long begin = n * w / workers;
    const long end = n * (w + 1) / workers;
    SampleSummary& s = partial[static_cast<std::size_t>(w)];
    try {
      for (long i = begin; i < end; ++i) {
        SampleOutcome o = eval(i);
        s.max_violation = std::max(s.max_violation, o.violation);
        if (o.witness && !s.first_witness) s.first_witness = std::move(o.witness);
      }
    } catch (...) {
      errors[static_cast<std::size_t>(w)] = std::current_exception();
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) threads.emplace_back(work, w);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  SampleSummary total;
  for (auto& s : partial) {
    total.max_violation = std::max(total.max_violation, s.max_violation);
    if (s.first_witness && !total.first_witness) {
      total.first_witness = std::move(s.first_witness);
    }
  }
  return total;
}

}  // namespace conelab::internal

#endif  // CONELAB_SRC_SAMPLE_RUNNER_H_
