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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Each criterion also has a wall-clock budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nilrec/affine_map.hpp"
#include "nilrec/bounds.hpp"
#include "nilrec/combinatorics.hpp"
#include "nilrec/measure.hpp"
#include "nilrec/monte_carlo.hpp"
#include "nilrec/numeric.hpp"
#include "nilrec/pipeline.hpp"
#include "nilrec/systems.hpp"
#include "nilrec/torus_geometry.hpp"
#include "nilrec/verification.hpp"
#include "nilrec_cli/cli.hpp"
#include "oracles.hpp"

namespace {

using namespace nilrec;
using dynamics::SymScalar;
using dynamics::SystemKind;
using experiments::Verdict;

// Collects the first failed expectation of a criterion.
class Checker {
 public:
  void Expect(bool ok, const std::string& what) {
    if (!ok && failure_.empty()) failure_ = what;
  }
  bool ok() const { return failure_.empty(); }
  const std::string& failure() const { return failure_; }
  void Note(const std::string& s) { note_ = s; }
  const std::string& note() const { return note_; }

 private:
  std::string failure_;
  std::string note_;
};

std::string Str(const Rational& q) { return ToFractionString(q); }

BigInt Pow(std::uint64_t base, unsigned long e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, e);
  return out;
}

experiments::PipelineConfig Config(SystemKind kind, std::int64_t lo, std::int64_t hi) {
  experiments::PipelineConfig c;
  c.system = kind;
  c.n_lo = lo;
  c.n_hi = hi;
  return c;
}

const experiments::EllCheck* FindCheck(const experiments::MeasureRow& row,
                                       const std::string& label) {
  for (const auto& c : row.checks) {
    if (c.label == label) return &c;
  }
  return nullptr;
}

bool RequiredChecksPass(const experiments::MeasureRow& row) {
  for (const auto& c : row.checks) {
    if (c.required && c.verdict != Verdict::kPass) return false;
  }
  return !row.checks.empty();
}

void ConstructionCorrectness(Checker& c) {
  const combinatorics::DigitProfile p1(2, 1);
  const auto s1 = combinatorics::CornerFreeEnumerate(p1);
  c.Expect(s1.side() == 81, "side of (2,1) set is not 81");
  c.Expect(s1.size() == 24, "(2,1) set has " + std::to_string(s1.size()) + " points");
  c.Expect(combinatorics::CornerFreeCardinality(p1) == Factorial(4), "cardinality formula at (2,1)");
  c.Expect(!verification::VerifyCornerFree(s1).has_value(), "(2,1) set has a corner");

  const combinatorics::DigitProfile p2(2, 2);
  const auto s2 = combinatorics::CornerFreeEnumerate(p2);
  const BigInt formula = Factorial(8) / (Factorial(2) * Factorial(2) * Factorial(2) * Factorial(2));
  c.Expect(s2.size() == 2520, "(2,2) set has " + std::to_string(s2.size()) + " points");
  c.Expect(formula == 2520 && combinatorics::CornerFreeCardinality(p2) == formula,
           "cardinality formula at (2,2)");
  c.Expect(!verification::VerifyCornerFree(s2).has_value(), "(2,2) set has a corner");
  c.Note("|Lambda| = 24 in [81]^2, 2520 in [6561]^2");
}

void Slicing(Checker& c) {
  const auto lambda = combinatorics::CornerFreeEnumerate(combinatorics::DigitProfile(2, 1));
  const auto r = combinatorics::ThreePointFreeFromCornerFree(lambda);
  const std::uint64_t n = 81;
  const std::uint64_t slices = 3 * n - 2;
  // Pigeonhole over the slices, each point of Lambda x [N] landing in one.
  const std::uint64_t pigeonhole = (lambda.size() * n + slices - 1) / slices;
  c.Expect(pigeonhole == 9, "pigeonhole bound is " + std::to_string(pigeonhole));
  c.Expect(r.slice.size() >= pigeonhole, "best slice has " + std::to_string(r.slice.size()));
  c.Expect(r.slice.size() == r.selection.slice_sizes.at(static_cast<std::size_t>(r.selection.s)),
           "slice size does not match its histogram entry");
  c.Expect(!verification::VerifyThreePointFree(r.slice).has_value(), "slice has a three-point pattern");
  c.Note("|V_s| = " + std::to_string(r.slice.size()) + " at s = " + std::to_string(r.selection.s));
}

void MatrixForm(Checker& c) {
  std::mt19937_64 rng(testing::kDefaultSeed + 1);
  int applicable = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const auto s = testing::RandomSet(rng, 3, 6, 7);
    if (!testing::OnePerZLine(s)) continue;
    ++applicable;
    const bool set_ok = !verification::VerifyThreePointFree(s).has_value();
    const bool matrix_ok = !verification::VerifyMatrixProperties(
                                combinatorics::ThreePointFreeToMatrix(s))
                                .has_value();
    c.Expect(set_ok == matrix_ok, "disagreement at trial " + std::to_string(trial));
  }
  c.Expect(applicable > 0, "no random set met the precondition");
  c.Note(std::to_string(applicable) + " of 500 sets met the precondition");
}

void NilpotentMeasure(Checker& c) {
  const auto r = experiments::RunTheoremPipeline(Config(SystemKind::kT13, 1, 5));
  const BigInt n(81);
  const Rational closed = Rational(24) / (12 * n * n * n);
  const Rational bound = Rational(1, 81) * (Rational(24) / (4 * n * n));
  c.Expect(closed == Rational(2, 531441), "closed form is not 2/81^3");
  for (const auto& row : r.rows) {
    c.Expect(row.exact == closed, "n=" + std::to_string(row.n) + ": " + Str(row.exact));
    c.Expect(row.exact <= bound, "n=" + std::to_string(row.n) + " above |Lambda|/(4N^3)");
  }
  c.Expect(r.rows.size() == 5, "expected five rows");

  const auto lambda = combinatorics::CornerFreeEnumerate(combinatorics::DigitProfile(2, 1));
  const auto boxes = torus::BoxUnionFromSet(lambda, 81);
  torus::McConfig mc;
  mc.samples = 1000000;
  mc.seed = 1;
  const auto est = torus::MonteCarloMeasure(dynamics::BuiltinSystem(SystemKind::kT13), boxes, 2, mc);
  const double exact = closed.get_d();
  const double z = std::abs(est.estimate - exact) / est.stderr_value;
  c.Expect(z <= 4, "Monte Carlo " + std::to_string(est.estimate) + " is " + std::to_string(z) +
                       " sigma from exact");
  std::ostringstream note;
  note << "exact " << Str(closed) << ", MC " << est.estimate << " (" << est.hits << " hits, z="
       << z << ")";
  c.Note(note.str());
}

void CommutingMeasure(Checker& c) {
  const auto r = experiments::RunTheoremPipeline(Config(SystemKind::kT11, 1, 5));
  const BigInt n6 = Pow(81, 6);
  const BigInt vs(static_cast<unsigned long>(r.set_size));
  const Rational closed = Rational(vs) / (64 * n6);
  const Rational displayed = Rational(vs) / (8 * n6);
  c.Expect(vs >= 9, "slice smaller than the pigeonhole bound");
  for (const auto& row : r.rows) {
    const auto tag = "n=" + std::to_string(row.n);
    c.Expect(row.exact == closed, tag + ": " + Str(row.exact));
    c.Expect(row.exact <= displayed, tag + " above |V_s|/(8N^6)");
    const auto* star = FindCheck(row, "ell*");
    c.Expect(star != nullptr && star->verdict == Verdict::kPass, tag + " not below mu(A)^ell*");
    c.Expect(RequiredChecksPass(row), tag + " has a failed required check");
  }
  // The idealized accounting with |Lambda| in place of |V_s|.
  const auto ideal = experiments::ComputeExponentThreshold(
      experiments::ThresholdVariant::kCommuting2, BigInt(81), BigInt(24));
  const experiments::HpInterval target(Rational(23, 11), 50);
  const double gap = std::max(std::abs(ideal.ell_star.upper() - target.lower()),
                              std::abs(target.upper() - ideal.ell_star.lower()));
  c.Expect(gap < 1e-12, "idealized ell* off by " + std::to_string(gap));
  c.Note("exact " + Str(closed) + ", ell* = " + r.ell_star + ", ideal " +
         ideal.ell_star.ToString(15));
}

void StripPipeline(Checker& c) {
  const auto s = combinatorics::BehrendAp3Construct(20);
  c.Expect(!verification::VerifyAp3Free(s).has_value(), "Behrend set has a 3-AP");
  const auto r = experiments::RunTheoremPipeline(Config(SystemKind::kT12, -3, 3));
  const Rational l(1, 40);
  const Rational closed = Rational(static_cast<long>(s.size())) * l * l / 2;
  c.Expect(r.set_size == s.size(), "pipeline used a different set");
  std::optional<Rational> first;
  for (const auto& row : r.rows) {
    if (row.n == 0) continue;
    const auto tag = "n=" + std::to_string(row.n);
    c.Expect(row.pattern_2d && *row.pattern_2d == closed, tag + " pattern differs from closed form");
    if (!first) first = row.exact;
    c.Expect(row.exact == *first, tag + " breaks n-invariance");
    c.Expect(RequiredChecksPass(row), tag + " not below mu(A)^ell for some ell <= ell*");
  }
  c.Note("|S| = " + std::to_string(s.size()) + ", pattern " + Str(closed) + ", full " +
         (first ? Str(*first) : std::string("?")) + ", ell* = " + r.ell_star);
}

void SymbolicAlgebra(Checker& c) {
  using dynamics::AffineTorusMap;
  const auto a = SymScalar::Alpha();
  const auto t13 = dynamics::BuiltinSystem(SystemKind::kT13);
  const auto& t1 = t13.generators[0].map;
  const auto& t2 = t13.generators[1].map;
  const auto k = dynamics::Commutator(t1, t2);
  c.Expect(k == AffineTorusMap(IntMatrix::Identity(3), {SymScalar(), a, -a}),
           "[T1,T2] is not (x, y+a, z-a)");
  c.Expect(dynamics::Compose(k, t1) == dynamics::Compose(t1, k) &&
               dynamics::Compose(k, t2) == dynamics::Compose(t2, k),
           "commutator is not central");
  const std::vector<AffineTorusMap> gens{t1, t2};
  c.Expect(dynamics::NilpotencyClass(gens, 6) == 2, "nilpotency class is not 2");

  for (auto kind : {SystemKind::kT11, SystemKind::kT12}) {
    const auto s = dynamics::BuiltinSystem(kind);
    for (const auto& g : s.generators) {
      for (const auto& h : s.generators) {
        const auto rep = dynamics::CheckCommute(g.map, h.map);
        c.Expect(rep.commute && rep.criterion_applicable && rep.criterion,
                 dynamics::SystemKindName(kind) + std::string(": ") + g.name + "," + h.name);
      }
    }
  }
  for (int n = 1; n <= 6; ++n) {
    const auto p = dynamics::Power(t1, n);
    const bool ok = p.matrix()(1, 0) == n && p.translation()[0] == n * a &&
                    p.translation()[1] == (n * (n - 1) / 2) * a;
    c.Expect(ok, "power formula fails at n=" + std::to_string(n));
  }
}

void OracleEquivalence(Checker& c) {
  std::mt19937_64 rng(testing::kDefaultSeed + 8);
  std::uniform_int_distribution<int> side(1, 6);
  std::uniform_int_distribution<int> iterate(1, 4);
  for (int trial = 0; trial < 100; ++trial) {
    const std::int64_t n_side = side(rng);
    const long n = iterate(rng);
    const auto tag = "trial " + std::to_string(trial);
    const auto s3 = testing::RandomSet(rng, 3, n_side, 5);
    const auto b3 = torus::BoxUnionFromSet(s3, n_side);
    const auto t11 = dynamics::ReduceShifts(dynamics::BuiltinSystem(SystemKind::kT11), n).table;
    c.Expect(torus::TripleIntersectionMeasureFactorized(b3, t11) ==
                 testing::NaiveIntersectionMeasure(b3, t11),
             tag + ": factorized engine");
    const auto s2 = testing::RandomSet(rng, 2, n_side, 5);
    const auto b2 = torus::BoxUnionFromSet(s2, n_side);
    const auto t13 = dynamics::ReduceShifts(dynamics::BuiltinSystem(SystemKind::kT13), n).table;
    c.Expect(torus::TripleIntersectionMeasureSharedShift(b2, t13) ==
                 testing::NaiveIntersectionMeasure(b2, t13),
             tag + ": shared-shift engine");
  }
  c.Note("100 instances, both engines");
}

void ThresholdMonotonicity(Checker& c) {
  std::vector<experiments::HpInterval> values;
  std::string note;
  for (int d = 2; d <= 4; ++d) {
    const combinatorics::DigitProfile p(d, 1);
    const auto t = experiments::ComputeExponentThreshold(
        experiments::ThresholdVariant::kCommuting2, p.side(),
        combinatorics::CornerFreeCardinality(p), 50);
    c.Expect(t.ell_star.StrictlyBelow(experiments::HpInterval(Rational(4), 50)),
             "ell* reached 4 at d=" + std::to_string(d));
    if (!values.empty()) {
      c.Expect(values.back().StrictlyBelow(t.ell_star),
               "not increasing at d=" + std::to_string(d));
    }
    note += (note.empty() ? "" : ", ") + t.ell_star.ToString(12);
    values.push_back(t.ell_star);
  }
  c.Note(note);
}

std::string RunOrDie(Checker& c, const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::RunCli(args, out, err);
  c.Expect(code == 0, "exit " + std::to_string(code) + ": " + err.str());
  return out.str();
}

void Reproducibility(Checker& c) {
  const std::vector<std::vector<std::string>> configs{
      {"measure", "t13", "--n", "1..3", "--mc-samples", "200000", "--seed", "5"},
      {"measure", "t11", "--n", "1..2", "--mc-samples", "200000", "--seed", "9"},
      {"measure", "t12", "--N", "20", "--n", "1..2", "--mc-samples", "100000", "--seed", "7"}};
  for (const auto& base : configs) {
    for (const std::string format : {"json", "csv"}) {
      std::vector<std::string> reports;
      for (const std::string jobs : {"1", "1", "3"}) {
        auto args = base;
        args.insert(args.end(), {"--format", format, "--no-timestamp", "--jobs", jobs});
        reports.push_back(RunOrDie(c, args));
      }
      c.Expect(!reports[0].empty(), base[1] + " produced no report");
      c.Expect(reports[0] == reports[1], base[1] + " " + format + " differs between runs");
      c.Expect(reports[0] == reports[2], base[1] + " " + format + " differs under --jobs 3");
    }
  }
  c.Note("3 systems x 2 formats, jobs 1/1/3");
}

struct Criterion {
  const char* name;
  double budget_seconds;
  std::function<void(Checker&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"construction correctness", 5, ConstructionCorrectness},
      {"slicing", 5, Slicing},
      {"matrix form equivalence", 10, MatrixForm},
      {"nilpotent pair measure", 60, NilpotentMeasure},
      {"commuting pair measure", 60, CommutingMeasure},
      {"strip set pipeline", 30, StripPipeline},
      {"symbolic algebra", 5, SymbolicAlgebra},
      {"oracle equivalence", 60, OracleEquivalence},
      {"threshold monotonicity", 5, ThresholdMonotonicity},
      {"reproducibility", 30, Reproducibility},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& cr = criteria[i];
    Checker checker;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.run(checker);
    } catch (const std::exception& e) {
      checker.Expect(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    checker.Expect(seconds <= cr.budget_seconds, "over the time budget");
    const bool ok = checker.ok();
    if (!ok) ++failures;
    std::printf("%s %2zu %-28s %7.3fs (budget %gs)  %s\n", ok ? "PASS" : "FAIL", i + 1, cr.name,
                seconds, cr.budget_seconds, ok ? checker.note().c_str() : checker.failure().c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
