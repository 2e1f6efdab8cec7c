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

#ifndef NILREC_PIPELINE_HPP_
#define NILREC_PIPELINE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nilrec/bounds.hpp"
#include "nilrec/combinatorics.hpp"
#include "nilrec/numeric.hpp"
#include "nilrec/systems.hpp"

namespace nilrec::experiments {

struct PipelineConfig {
  dynamics::SystemKind system = dynamics::SystemKind::kT13;
  // Digit profile for t11 and t13.
  int d = 2;
  int m = 1;
  // Ambient N for t12.
  std::uint64_t n_ambient = 20;
  std::int64_t n_lo = 1;
  std::int64_t n_hi = 5;
  std::uint64_t mc_samples = 0;
  std::uint64_t seed = 1;
  int jobs = 1;
  int precision = kDefaultPrecisionDigits;
  std::uint64_t cap = combinatorics::kDefaultEnumerationCap;
  double alpha = 0.41421356237309504880;
  double beta = 0.73205080756887729353;
};

struct EllCheck {
  std::string label;  // "1", "2", "3", "ell*-0.01", "ell*"
  std::string ell;
  std::string power;  // mu(A)^ell
  // Only ell <= ell* is claimed; the others are informational.
  bool required = false;
  Verdict verdict = Verdict::kInconclusive;
};

struct MeasureRow {
  std::int64_t n = 0;
  Rational exact;
  std::optional<double> mc_estimate;
  std::optional<double> mc_stderr;
  // Three-role AP3 pattern on the strip set (t12 only).
  std::optional<Rational> pattern_2d;
  // Closed-form upper bound the construction argument gives.
  std::optional<Rational> upper_bound;
  bool upper_bound_ok = true;
  std::vector<EllCheck> checks;
};

struct MeasureReport {
  std::string system;
  std::int64_t n_ambient = 0;
  std::uint64_t set_size = 0;
  std::string certificate;
  Rational mu_a;
  ThresholdVariant variant = ThresholdVariant::kCommuting2;
  std::string ell_star;
  std::optional<std::int64_t> slice_s;
  std::vector<std::string> discrepancies;
  std::vector<MeasureRow> rows;
  PipelineConfig config;
  bool all_pass = true;
};

ThresholdVariant VariantFor(dynamics::SystemKind kind);

// Builds the set for config.system, certifies it, and computes the exact
// measure for every n in [n_lo, n_hi]. Throws CertificationError with the
// witness if a construction fails its oracle.
MeasureReport RunTheoremPipeline(const PipelineConfig& config);

}  // namespace nilrec::experiments

#endif  // NILREC_PIPELINE_HPP_
