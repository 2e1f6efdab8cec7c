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

#ifndef NILREC_ORBIT_HPP_
#define NILREC_ORBIT_HPP_

#include <cstdint>
#include <span>

#include "nilrec/affine_map.hpp"

namespace nilrec::dynamics {

struct OrbitConfig {
  std::uint64_t steps = 100000;
  int grid = 100;  // cells per axis
  std::uint64_t seed = 1;
  double alpha = 0.41421356237309504880;  // sqrt(2) - 1
  double beta = 0.73205080756887729353;   // sqrt(3) - 1
  // Random words over the generators and their inverses; otherwise the first
  // generator is iterated.
  bool random_words = false;
};

struct OrbitReport {
  std::uint64_t steps = 0;
  std::uint64_t cells = 0;
  // Total variation distance between the empirical cell occupation and the
  // uniform distribution.
  double discrepancy = 0;
  double max_cell_deviation = 0;
};

// Throws kSizeCap when grid^dim exceeds 2^26 cells.
OrbitReport OrbitStatistics(std::span<const AffineTorusMap> generators,
                            std::span<const double> start,
                            const OrbitConfig& config);

}  // namespace nilrec::dynamics

#endif  // NILREC_ORBIT_HPP_
