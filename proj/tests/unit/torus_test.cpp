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

#include <gtest/gtest.h>

#include <random>

#include "nilrec/combinatorics.hpp"
#include "nilrec/error.hpp"
#include "nilrec/measure.hpp"
#include "nilrec/monte_carlo.hpp"
#include "nilrec/piecewise.hpp"
#include "nilrec/systems.hpp"
#include "nilrec/torus_geometry.hpp"
#include "oracles.hpp"

namespace nilrec::torus {
namespace {

using dynamics::BuiltinSystem;
using dynamics::ReduceShifts;
using dynamics::SystemKind;

Rational Q(long p, long q = 1) { return Rational(p) / q; }

TEST(Interval, Validation) {
  EXPECT_NO_THROW(Interval(Q(0), Q(1)));
  EXPECT_THROW(Interval(Q(1, 2), Q(1, 2)), Error);
  EXPECT_THROW(Interval(Q(-1, 2), Q(1, 2)), Error);
  EXPECT_THROW(Interval(Q(1, 2), Q(3, 2)), Error);
  EXPECT_EQ(OverlapLength(Interval(Q(0), Q(1, 2)), Interval(Q(1, 4), Q(1))), Q(1, 4));
  EXPECT_EQ(OverlapLength(Interval(Q(0), Q(1, 4)), Interval(Q(1, 4), Q(1))), 0);
}

TEST(IntervalUnion, MergesAndMeasures) {
  IntervalUnion u({Interval(Q(1, 2), Q(3, 4)), Interval(Q(0), Q(1, 4)), Interval(Q(1, 8), Q(1, 2))});
  ASSERT_EQ(u.intervals().size(), 1u);
  EXPECT_EQ(u.measure(), Q(3, 4));
}

TEST(BoxUnion, RejectsOverlapAndReportsMeasure) {
  const Box a{Interval(Q(0), Q(1, 2)), Interval(Q(0), Q(1, 2))};
  const Box b{Interval(Q(1, 4), Q(3, 4)), Interval(Q(1, 4), Q(3, 4))};
  EXPECT_THROW(BoxUnion(2, {a, b}), Error);
  const Box c{Interval(Q(1, 2), Q(1)), Interval(Q(0), Q(1, 2))};
  BoxUnion u(2, {a, c});
  EXPECT_EQ(u.measure(), Q(1, 2));
  const double inside[2] = {0.6, 0.1};
  const double outside[2] = {0.6, 0.6};
  EXPECT_TRUE(u.ContainsApprox(inside));
  EXPECT_FALSE(u.ContainsApprox(outside));
}

TEST(BoxUnionFromSet, Examples) {
  auto u = BoxUnionFromSet(LatticePointSet(2, 1, {{0, 0, 0}}), 1);
  EXPECT_EQ(u.measure(), Q(1, 4));
  const auto lambda = combinatorics::CornerFreeEnumerate(combinatorics::DigitProfile(2, 1));
  EXPECT_EQ(BoxUnionFromSet(lambda, 81).measure(), Q(2, 2187));
  const auto slice = combinatorics::ThreePointFreeFromCornerFree(lambda).slice;
  EXPECT_EQ(BoxUnionFromSet(slice, 81).measure(),
            Rational(static_cast<long>(slice.size())) / (8L * 81 * 81 * 81));
  EXPECT_THROW(BoxUnionFromSet(LatticePointSet(1, 5, {{4, 0, 0}}), 4), Error);
}

TEST(Polynomial, ArithmeticAndIntegral) {
  const auto line = Polynomial::Linear(Q(0), Q(0), Q(1), Q(2));  // 2c
  EXPECT_EQ(line(Q(1, 2)), Q(1));
  EXPECT_EQ((line * line).Integral(Q(0), Q(1)), Q(4, 3));
  EXPECT_EQ(Polynomial::Constant(Q(3)).Integral(Q(1, 4), Q(3, 4)), Q(3, 2));
}

PiecewisePolynomial Triangle(const Rational& l) {
  // (l - |c|)_+ on the torus, peak at c = 0.
  return PiecewisePolynomial(
      {Q(0), l, 1 - l, Q(1)},
      {Polynomial::Linear(Q(0), l, l, Q(0)), Polynomial::Constant(Q(0)),
       Polynomial::Linear(1 - l, Q(0), Q(1), l)});
}

TEST(IntegrateProduct, Examples) {
  EXPECT_EQ(IntegrateProduct({}), 1);
  const PiecewisePolynomial one[] = {PiecewisePolynomial::Constant(Q(1))};
  EXPECT_EQ(IntegrateProduct(one), 1);
  for (long n : {2L, 3L, 81L}) {
    const Rational l(1, 2 * n);
    const PiecewisePolynomial tri[] = {Triangle(l), Triangle(l)};
    EXPECT_EQ(IntegrateProduct(tri), Rational(1, 12 * n * n * n));
  }
}

TEST(OverlapProfile, Examples) {
  const Rational l(1, 40);
  const Interval i(Q(0), l);
  const RowConstraint ap3[] = {{i, -1, 0}, {i, 0, 1}, {i, 0, 2}};
  const auto f = OverlapProfile(ap3);
  EXPECT_EQ(f.Integral(), l * l / 2);

  const RowConstraint far[] = {{Interval(Q(0), Q(1, 8)), -1, 0}, {Interval(Q(1, 2), Q(5, 8)), -1, 0}};
  EXPECT_EQ(OverlapProfile(far).Integral(), 0);

  const RowConstraint still[] = {{i, 0, 0}, {i, 0, 0}, {i, 0, 0}};
  const auto g = OverlapProfile(still);
  EXPECT_EQ(g(Q(1, 3)), l);
  EXPECT_EQ(g.Integral(), l);

  const RowConstraint mixed[] = {{i, 0, 1}, {i, 1, 1}};
  EXPECT_THROW(OverlapProfile(mixed), Error);
}

TEST(OverlapProfile, MatchesNaiveArcLengthPointwise) {
  std::mt19937_64 rng(testing::kDefaultSeed);
  std::uniform_int_distribution<int> num(0, 15);
  std::uniform_int_distribution<int> kap(-3, 3);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<RowConstraint> row;
    std::vector<Interval> targets;
    std::vector<std::int64_t> coeffs;
    for (int r = 0; r < 3; ++r) {
      const int a = num(rng);
      const int len = 1 + num(rng) % 8;
      const Interval iv(Q(a, 16), Q(std::min(16, a + len), 16));
      const int k = kap(rng);
      row.push_back({iv, k == 0 ? -1 : 0, k});
      targets.push_back(iv);
      coeffs.push_back(k);
    }
    const auto f = OverlapProfile(row);
    for (int s = 0; s < 97; ++s) {
      const Rational c(s, 97);
      ASSERT_EQ(f(c), testing::NaiveArcLength(targets, coeffs, c)) << trial << " " << s;
    }
  }
}

ShiftConstraintTable LeadingRoles(const ShiftConstraintTable& t, int roles) {
  std::vector<ShiftTerm> e;
  for (int r = 0; r < roles; ++r)
    for (int j = 0; j < t.rows(); ++j) e.push_back(t.at(r, j));
  return ShiftConstraintTable(roles, t.rows(), t.params(), e);
}

TEST(Engines, EmptyAndSingleBox) {
  const auto t11 = ReduceShifts(BuiltinSystem(SystemKind::kT11), 1).table;
  EXPECT_EQ(TripleIntersectionMeasureFactorized(BoxUnion(3, {}), t11), 0);
  for (long n : {1L, 3L, 7L}) {
    const auto one = BoxUnionFromSet(LatticePointSet(3, n, {{0, 0, 0}}), n);
    const Rational l(1, 2 * n);
    EXPECT_EQ(TripleIntersectionMeasureFactorized(one, t11), l * l * l * l * l * l);
  }
  const auto t13 = ReduceShifts(BuiltinSystem(SystemKind::kT13), 1).table;
  EXPECT_EQ(TripleIntersectionMeasureSharedShift(BoxUnion(2, {}), t13), 0);
}

TEST(Engines, PreconditionsAreChecked) {
  const auto t13 = ReduceShifts(BuiltinSystem(SystemKind::kT13), 1).table;
  const auto b2 = BoxUnionFromSet(LatticePointSet(2, 3, {{0, 0, 0}}), 3);
  EXPECT_THROW(TripleIntersectionMeasureFactorized(b2, t13), Error);
  const auto t11 = ReduceShifts(BuiltinSystem(SystemKind::kT11), 1).table;
  const auto b3 = BoxUnionFromSet(LatticePointSet(3, 3, {{0, 0, 0}}), 3);
  EXPECT_THROW(TripleIntersectionMeasureSharedShift(b3, t11), Error);
  EXPECT_THROW(IntersectionMeasure(b2, t11), Error);
  EXPECT_THROW(ShiftConstraintTable(2, 1, 1, {{0, 0}, {-1, 0}}), Error);
  EXPECT_THROW(ShiftConstraintTable(2, 1, 1, {{1, 1}, {-1, 0}}), Error);
}

TEST(Engines, ClosedFormsAndNInvariance) {
  const auto lambda = combinatorics::CornerFreeEnumerate(combinatorics::DigitProfile(2, 1));
  const auto b13 = BoxUnionFromSet(lambda, 81);
  const auto slice = combinatorics::ThreePointFreeFromCornerFree(lambda).slice;
  const auto b11 = BoxUnionFromSet(slice, 81);
  const auto behrend = combinatorics::BehrendAp3Construct(20);
  const auto b12 = BoxUnionFromSet(behrend, 20);
  const Rational n81(81);
  const Rational l20(1, 40);
  for (long n : {1L, 2L, 3L, 5L, 10L, -2L}) {
    const auto t13 = ReduceShifts(BuiltinSystem(SystemKind::kT13), n).table;
    EXPECT_EQ(TripleIntersectionMeasureSharedShift(b13, t13), Rational(2, 81L * 81 * 81)) << n;
    const auto t11 = ReduceShifts(BuiltinSystem(SystemKind::kT11), n).table;
    EXPECT_EQ(TripleIntersectionMeasureFactorized(b11, t11),
              Rational(static_cast<long>(slice.size())) / (64 * n81 * n81 * n81 * n81 * n81 * n81))
        << n;
    const auto t12 = ReduceShifts(BuiltinSystem(SystemKind::kT12), n).table;
    const Rational pattern = TripleIntersectionMeasureSharedShift(b12, LeadingRoles(t12, 3));
    EXPECT_EQ(pattern, Rational(static_cast<long>(behrend.size())) * l20 * l20 / 2) << n;
    EXPECT_EQ(IntersectionMeasure(b12, t12), b12.measure() * pattern) << n;
  }
}

TEST(Engines, AgreeWithNaiveOracleOnRandomSets) {
  std::mt19937_64 rng(testing::kDefaultSeed);
  std::uniform_int_distribution<int> side(1, 6);
  std::uniform_int_distribution<int> iterate(1, 3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::int64_t n_side = side(rng);
    const long n = iterate(rng);
    const auto s3 = testing::RandomSet(rng, 3, n_side, 5);
    const auto b3 = BoxUnionFromSet(s3, n_side);
    const auto t11 = ReduceShifts(BuiltinSystem(SystemKind::kT11), n).table;
    ASSERT_EQ(TripleIntersectionMeasureFactorized(b3, t11), testing::NaiveIntersectionMeasure(b3, t11));

    const auto s2 = testing::RandomSet(rng, 2, n_side, 5);
    const auto b2 = BoxUnionFromSet(s2, n_side);
    const auto t13 = ReduceShifts(BuiltinSystem(SystemKind::kT13), n).table;
    ASSERT_EQ(TripleIntersectionMeasureSharedShift(b2, t13), testing::NaiveIntersectionMeasure(b2, t13));

    const auto s1 = testing::RandomSet(rng, 1, 2 * n_side, 5);
    const auto b1 = BoxUnionFromSet(s1, 2 * n_side);
    const auto t12 = ReduceShifts(BuiltinSystem(SystemKind::kT12), n).table;
    // The T3 row mixes parameters, which the oracle cannot integrate. Its
    // parameter is private, so averaging it out leaves a factor mu(B).
    ASSERT_EQ(IntersectionMeasure(b1, t12),
              b1.measure() * testing::NaiveIntersectionMeasure(b1, LeadingRoles(t12, 3)));
    ASSERT_EQ(TripleIntersectionMeasureSharedShift(b1, LeadingRoles(t12, 3)),
              testing::NaiveIntersectionMeasure(b1, LeadingRoles(t12, 3)));
  }
}

TEST(Engines, BoundedByEachRoleAndParallelIsExact) {
  std::mt19937_64 rng(testing::kDefaultSeed + 3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto s = testing::RandomSet(rng, 2, 9, 30);
    const auto b = BoxUnionFromSet(s, 9);
    const auto t13 = ReduceShifts(BuiltinSystem(SystemKind::kT13), 2).table;
    const Rational serial = TripleIntersectionMeasureSharedShift(b, t13, 1);
    EXPECT_EQ(TripleIntersectionMeasureSharedShift(b, t13, 4), serial);
    EXPECT_GE(serial, 0);
    EXPECT_LE(serial, b.measure());
  }
}

TEST(MonteCarlo, IdentityIterateGivesMuA) {
  const auto lambda = combinatorics::CornerFreeEnumerate(combinatorics::DigitProfile(2, 1));
  const auto b = BoxUnionFromSet(lambda, 81);
  McConfig config{200000, 5, 1};
  const auto est = MonteCarloMeasure(BuiltinSystem(SystemKind::kT13), b, 0, config);
  EXPECT_NEAR(est.estimate, b.measure().get_d(), 4 * est.stderr_value);
}

TEST(MonteCarlo, IndependentOfJobCount) {
  const auto s = combinatorics::BehrendAp3Construct(20);
  const auto b = BoxUnionFromSet(s, 20);
  McConfig one{100000, 11, 1};
  McConfig four{100000, 11, 4};
  const auto sys = BuiltinSystem(SystemKind::kT12);
  EXPECT_EQ(MonteCarloMeasure(sys, b, 2, one).hits, MonteCarloMeasure(sys, b, 2, four).hits);
}

TEST(MonteCarlo, TracksExactValueAcrossSeeds) {
  // Shared-shift pattern on a coarse grid where the measure is large enough
  // for a meaningful statistical comparison.
  const int n_side = 4;
  const auto s = LatticePointSet(2, n_side, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {2, 3, 0}});
  const auto b = BoxUnionFromSet(s, n_side);
  const auto sys = BuiltinSystem(SystemKind::kT13);
  const auto exact = TripleIntersectionMeasureSharedShift(b, ReduceShifts(sys, 1).table).get_d();
  int within = 0;
  const int runs = 20;
  for (int seed = 0; seed < runs; ++seed) {
    const auto est = MonteCarloMeasure(sys, b, 1, {40000, static_cast<std::uint64_t>(seed), 1});
    if (std::abs(est.estimate - exact) <= 4 * est.stderr_value) ++within;
  }
  EXPECT_GE(within, runs * 95 / 100);
}

TEST(MonteCarlo, MatchesFactorizedEngineForT11) {
  const int n_side = 3;
  const auto s = LatticePointSet(3, n_side, {{0, 0, 0}, {1, 2, 0}, {2, 1, 1}});
  const auto b = BoxUnionFromSet(s, n_side);
  const auto sys = BuiltinSystem(SystemKind::kT11);
  const auto exact = TripleIntersectionMeasureFactorized(b, ReduceShifts(sys, 2).table).get_d();
  const auto est = MonteCarloMeasure(sys, b, 2, {1000000, 3, 1});
  EXPECT_NEAR(est.estimate, exact, 4 * est.stderr_value);
}

}  // namespace
}  // namespace nilrec::torus
