// Copyright 2026 The nilrec Authors
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

#ifndef NILREC_MONTE_CARLO_HPP_
#define NILREC_MONTE_CARLO_HPP_

#include <cstdint>

#include "nilrec/systems.hpp"
#include "nilrec/torus_geometry.hpp"

namespace nilrec::torus {

struct McConfig {
  std::uint64_t samples = 0;
  std::uint64_t seed = 1;
  int jobs = 1;
  double alpha = 0.41421356237309504880;
  double beta = 0.73205080756887729353;
};

struct McEstimate {
  std::uint64_t hits = 0;
  std::uint64_t samples = 0;
  double estimate = 0;
  // Adjusted binomial (Agresti-Coull) standard error; stays positive when
  // there are no hits.
  double stderr_value = 0;
};

// Uniform sample in [0, 1) determined by (seed, index, coordinate) alone.
double CounterUniform(std::uint64_t seed, std::uint64_t index,
                      std::uint64_t coord);

// Estimates the joint return measure for A = T^averaged x B, B given on the
// system's indicator coordinates. Result does not depend on config.jobs.
McEstimate MonteCarloMeasure(const dynamics::RecurrenceSystem& system,
                             const BoxUnion& b, std::int64_t n,
                             const McConfig& config);

}  // namespace nilrec::torus

#endif  // NILREC_MONTE_CARLO_HPP_
