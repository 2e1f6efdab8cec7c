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

#include "nilrec/pipeline.hpp"

#include <algorithm>

#include "nilrec/error.hpp"
#include "nilrec/measure.hpp"
#include "nilrec/monte_carlo.hpp"
#include "nilrec/torus_geometry.hpp"

namespace nilrec::experiments {

using dynamics::SystemKind;

ThresholdVariant VariantFor(SystemKind kind) {
  switch (kind) {
    case SystemKind::kT11:
      return ThresholdVariant::kCommuting2;
    case SystemKind::kT12:
      return ThresholdVariant::kAp3Strip;
    case SystemKind::kT13:
      return ThresholdVariant::kNilpotent2;
  }
  return ThresholdVariant::kCommuting2;
}

namespace {

struct Construction {
  std::int64_t n = 0;
  LatticePointSet set{1, 1, {}};
  std::optional<std::int64_t> slice_s;
};

Construction Build(const PipelineConfig& config) {
  Construction out;
  if (config.system == SystemKind::kT12) {
    if (config.n_ambient < 1 ||
        config.n_ambient > static_cast<std::uint64_t>(INT64_MAX)) {
      throw Error(Errc::kDomain, "N out of range");
    }
    out.n = static_cast<std::int64_t>(config.n_ambient);
    out.set = combinatorics::BehrendAp3Construct(config.n_ambient, config.cap);
    return out;
  }
  const combinatorics::DigitProfile profile(config.d, config.m);
  const BigInt side = profile.side();
  if (!side.fits_slong_p()) {
    throw Error(Errc::kSizeCap, "ambient side does not fit in 64 bits");
  }
  out.n = side.get_si();
  LatticePointSet lambda = combinatorics::CornerFreeEnumerate(profile, config.cap);
  if (config.system == SystemKind::kT13) {
    out.set = std::move(lambda);
    return out;
  }
  auto slice = combinatorics::ThreePointFreeFromCornerFree(lambda);
  out.slice_s = slice.selection.s;
  out.set = std::move(slice.slice);
  return out;
}

BigInt PowN(std::int64_t n, unsigned long e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(n), e);
  return out;
}

torus::ShiftConstraintTable LeadingRoles(const torus::ShiftConstraintTable& t,
                                         int roles) {
  std::vector<torus::ShiftTerm> entries;
  for (int r = 0; r < roles; ++r) {
    for (int j = 0; j < t.rows(); ++j) entries.push_back(t.at(r, j));
  }
  return torus::ShiftConstraintTable(roles, t.rows(), t.params(), std::move(entries));
}

}  // namespace

MeasureReport RunTheoremPipeline(const PipelineConfig& config) {
  if (config.n_lo > config.n_hi) throw Error(Errc::kDomain, "empty n range");
  if (config.n_hi - config.n_lo > 10000) {
    throw Error(Errc::kSizeCap, "n range longer than 10000");
  }
  const auto system = dynamics::BuiltinSystem(config.system);
  const Construction built = Build(config);
  const torus::BoxUnion boxes = torus::BoxUnionFromSet(built.set, built.n);

  MeasureReport report;
  report.system = dynamics::SystemKindName(config.system);
  report.n_ambient = built.n;
  report.set_size = built.set.size();
  report.certificate = CertificateName(built.set.certificate());
  report.mu_a = boxes.measure();
  report.variant = VariantFor(config.system);
  report.slice_s = built.slice_s;
  report.discrepancies = dynamics::ReduceShifts(system, 1).discrepancies;
  report.config = config;

  if (built.set.empty()) {
    throw Error(Errc::kDomain, "construction produced an empty set");
  }
  const int check_digits = std::max(config.precision, kCheckPrecisionDigits);
  const auto threshold = ComputeExponentThreshold(
      report.variant, BigInt(static_cast<long>(built.n)),
      BigInt(static_cast<unsigned long>(report.set_size)), check_digits);
  report.ell_star = threshold.ell_star.ToString(config.precision);

  struct Ell {
    std::string label;
    HpInterval value;
  };
  const HpInterval& star = threshold.ell_star;
  std::vector<Ell> ells;
  for (long k = 1; k <= 3; ++k) {
    ells.push_back({std::to_string(k), HpInterval(Rational(k), check_digits)});
  }
  ells.push_back({"ell*-0.01", star - HpInterval(Rational(1, 100), check_digits)});
  ells.push_back({"ell*", star});
  const HpInterval log_mu = HpInterval::Log(HpInterval(report.mu_a, check_digits));

  for (std::int64_t n = config.n_lo; n <= config.n_hi; ++n) {
    MeasureRow row;
    row.n = n;
    if (n == 0) {
      row.exact = report.mu_a;
    } else {
      const auto red = dynamics::ReduceShifts(system, n);
      if (!red.full_rank) {
        throw Error(Errc::kConsistency, "shift reduction is not full rank");
      }
      switch (config.system) {
        case SystemKind::kT11:
          row.exact = torus::TripleIntersectionMeasureFactorized(boxes, red.table, config.jobs);
          row.upper_bound = Rational(report.set_size) / Rational(8 * PowN(built.n, 6));
          break;
        case SystemKind::kT13:
          row.exact = torus::TripleIntersectionMeasureSharedShift(boxes, red.table, config.jobs);
          row.upper_bound = Rational(report.set_size) / Rational(4 * PowN(built.n, 3));
          break;
        case SystemKind::kT12:
          row.exact = torus::IntersectionMeasure(boxes, red.table, config.jobs);
          row.pattern_2d = torus::TripleIntersectionMeasureSharedShift(
              boxes, LeadingRoles(red.table, 3), config.jobs);
          row.upper_bound = row.pattern_2d;
          break;
      }
      row.exact.canonicalize();
      row.upper_bound_ok = row.exact <= *row.upper_bound;
      for (const auto& ell : ells) {
        EllCheck check;
        check.label = ell.label;
        check.ell = ell.value.ToString(15);
        check.power = HpInterval::Exp(ell.value * log_mu).ToString(12);
        check.required = !star.StrictlyBelow(ell.value);
        check.verdict = CheckBelowPower(row.exact, report.mu_a, ell.value, check_digits);
        if (check.required && check.verdict != Verdict::kPass) report.all_pass = false;
        row.checks.push_back(std::move(check));
      }
      if (!row.upper_bound_ok) report.all_pass = false;
    }
    if (config.mc_samples > 0) {
      torus::McConfig mc{config.mc_samples, config.seed, config.jobs, config.alpha,
                         config.beta};
      const auto est = torus::MonteCarloMeasure(system, boxes, n, mc);
      row.mc_estimate = est.estimate;
      row.mc_stderr = est.stderr_value;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace nilrec::experiments
