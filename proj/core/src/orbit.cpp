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

#include "nilrec/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "nilrec/error.hpp"

namespace nilrec::dynamics {

OrbitReport OrbitStatistics(std::span<const AffineTorusMap> generators,
                            std::span<const double> start,
                            const OrbitConfig& config) {
  if (generators.empty()) throw Error(Errc::kDomain, "no generators");
  if (config.grid < 1) throw Error(Errc::kDomain, "grid must be >= 1");
  const std::size_t dim = generators[0].dim();
  if (start.size() != dim) {
    throw Error(Errc::kDimension, "start point has the wrong dimension");
  }
  std::uint64_t cells = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    cells *= static_cast<std::uint64_t>(config.grid);
    if (cells > (std::uint64_t{1} << 26)) {
      throw Error(Errc::kSizeCap, "orbit grid exceeds 2^26 cells");
    }
  }

  std::vector<AffineTorusMap> alphabet(generators.begin(), generators.end());
  if (config.random_words) {
    for (const auto& g : generators) alphabet.push_back(Inverse(g));
  }
  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);

  std::vector<std::uint32_t> counts(cells, 0);
  std::vector<double> x(start.begin(), start.end());
  std::vector<double> y(dim);
  for (auto& v : x) v -= std::floor(v);
  for (std::uint64_t step = 0; step < config.steps; ++step) {
    const auto& g = config.random_words ? alphabet[pick(rng)] : alphabet[0];
    g.ApplyApprox(x, y, config.alpha, config.beta);
    std::swap(x, y);
    std::uint64_t cell = 0;
    for (std::size_t i = 0; i < dim; ++i) {
      auto c = static_cast<std::uint64_t>(x[i] * config.grid);
      c = std::min<std::uint64_t>(c, static_cast<std::uint64_t>(config.grid - 1));
      cell = cell * static_cast<std::uint64_t>(config.grid) + c;
    }
    ++counts[cell];
  }

  OrbitReport report{config.steps, cells, 0, 0};
  if (config.steps == 0) return report;
  const double uniform = 1.0 / static_cast<double>(cells);
  const double total = static_cast<double>(config.steps);
  double tv = 0;
  for (const auto c : counts) {
    const double dev = std::abs(c / total - uniform);
    tv += dev;
    report.max_cell_deviation = std::max(report.max_cell_deviation, dev);
  }
  report.discrepancy = tv / 2;
  return report;
}

}  // namespace nilrec::dynamics
