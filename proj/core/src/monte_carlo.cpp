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

#include "nilrec/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

#include "nilrec/error.hpp"

namespace nilrec::torus {

namespace {

std::uint64_t Mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

double CounterUniform(std::uint64_t seed, std::uint64_t index,
                      std::uint64_t coord) {
  const std::uint64_t h = Mix(Mix(Mix(seed) ^ index) + coord);
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

McEstimate MonteCarloMeasure(const dynamics::RecurrenceSystem& system,
                             const BoxUnion& b, std::int64_t n,
                             const McConfig& config) {
  if (config.samples == 0) throw Error(Errc::kDomain, "samples must be >= 1");
  if (static_cast<std::size_t>(b.dim()) != system.indicator_coordinates.size()) {
    throw Error(Errc::kDimension, "set dimension must match indicator coordinates");
  }
  const std::size_t dim = system.dim();
  std::vector<dynamics::AffineTorusMap> steps;
  for (int r = 0; r < static_cast<int>(system.roles.size()); ++r) {
    const auto m = system.RoleMap(r);
    steps.push_back(n < 0 ? dynamics::Inverse(m) : m);
  }
  const std::uint64_t reps = static_cast<std::uint64_t>(n < 0 ? -n : n);

  auto count = [&](std::uint64_t first, std::uint64_t last) {
    std::vector<double> x(dim), cur(dim), next(dim), ind(b.dim());
    std::uint64_t hits = 0;
    for (std::uint64_t i = first; i < last; ++i) {
      for (std::size_t c = 0; c < dim; ++c) x[c] = CounterUniform(config.seed, i, c);
      bool inside = true;
      for (std::size_t r = 0; r < steps.size() && inside; ++r) {
        cur = x;
        if (!steps[r].IsIdentity()) {
          for (std::uint64_t k = 0; k < reps; ++k) {
            steps[r].ApplyApprox(cur, next, config.alpha, config.beta);
            std::swap(cur, next);
          }
        }
        for (std::size_t j = 0; j < ind.size(); ++j) {
          ind[j] = cur[static_cast<std::size_t>(system.indicator_coordinates[j])];
        }
        inside = b.ContainsApprox(ind);
      }
      if (inside) ++hits;
    }
    return hits;
  };

  const auto workers = static_cast<std::uint64_t>(std::max(1, config.jobs));
  std::uint64_t hits = 0;
  if (workers == 1) {
    hits = count(0, config.samples);
  } else {
    std::vector<std::uint64_t> partial(workers, 0);
    std::vector<std::thread> threads;
    const std::uint64_t chunk = (config.samples + workers - 1) / workers;
    for (std::uint64_t w = 0; w < workers; ++w) {
      const std::uint64_t lo = std::min(config.samples, w * chunk);
      const std::uint64_t hi = std::min(config.samples, lo + chunk);
      threads.emplace_back([&, w, lo, hi] { partial[w] = count(lo, hi); });
    }
    for (auto& t : threads) t.join();
    for (auto p : partial) hits += p;
  }

  McEstimate est;
  est.hits = hits;
  est.samples = config.samples;
  est.estimate = static_cast<double>(hits) / static_cast<double>(config.samples);
  const double nt = static_cast<double>(config.samples) + 4.0;
  const double pt = (static_cast<double>(hits) + 2.0) / nt;
  est.stderr_value = std::sqrt(pt * (1.0 - pt) / nt);
  return est;
}

}  // namespace nilrec::torus
