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

#include "nilrec/affine_map.hpp"
#include "nilrec/error.hpp"
#include "nilrec/orbit.hpp"
#include "nilrec/systems.hpp"

namespace nilrec::dynamics {
namespace {

const SymScalar kA = SymScalar::Alpha();
const SymScalar kB = SymScalar::Beta();

std::vector<AffineTorusMap> Generators(const RecurrenceSystem& s) {
  std::vector<AffineTorusMap> out;
  for (const auto& g : s.generators) out.push_back(g.map);
  return out;
}

AffineTorusMap NaivePower(const AffineTorusMap& g, int n) {
  AffineTorusMap out = AffineTorusMap::Identity(g.dim());
  const AffineTorusMap step = n < 0 ? Inverse(g) : g;
  for (int i = 0; i < std::abs(n); ++i) out = Compose(step, out);
  return out;
}

TEST(SymScalar, ReducesRationalPartModOne) {
  EXPECT_EQ(SymScalar(Rational(5, 4), 1, 0), SymScalar(Rational(1, 4), 1, 0));
  EXPECT_EQ(SymScalar(Rational(-1, 4)), SymScalar(Rational(3, 4)));
  EXPECT_FALSE(SymScalar(0, 1, 0) == SymScalar(0, 0, 1));
  EXPECT_EQ(3 * kA - kA, SymScalar(0, 2, 0));
  EXPECT_NEAR(SymScalar(Rational(1, 2), 1, 1).Evaluate(0.25, 0.125), 0.875, 1e-15);
}

TEST(AffineMap, RejectsNonUnipotent) {
  EXPECT_THROW(AffineTorusMap(IntMatrix{{2, 0}, {0, 1}}, {SymScalar(), SymScalar()}), Error);
  EXPECT_THROW(AffineTorusMap(IntMatrix{{1, 0}, {0, 1}}, {SymScalar()}), Error);
}

TEST(AffineMap, BuiltinMatricesAreUnipotent) {
  for (auto kind : {SystemKind::kT11, SystemKind::kT12, SystemKind::kT13}) {
    for (const auto& g : BuiltinSystem(kind).generators) EXPECT_TRUE(IsUnipotent(g.map.matrix()));
  }
}

TEST(Compose, IdentityAndT11Product) {
  const auto s = BuiltinSystem(SystemKind::kT11);
  const auto& t1 = s.generators[0].map;
  const auto& t2 = s.generators[1].map;
  EXPECT_EQ(Compose(AffineTorusMap::Identity(6), t1), t1);
  const auto p = Compose(t1, t2);
  EXPECT_EQ(p, Compose(t2, t1));
  EXPECT_EQ(p.translation()[1], 2 * kB);
  EXPECT_EQ(p.translation()[5], kA + kB);
  EXPECT_NE(Compose(BuiltinSystem(SystemKind::kT13).generators[0].map,
                    BuiltinSystem(SystemKind::kT13).generators[1].map),
            Compose(BuiltinSystem(SystemKind::kT13).generators[1].map,
                    BuiltinSystem(SystemKind::kT13).generators[0].map));
  EXPECT_THROW(Compose(t1, AffineTorusMap::Identity(3)), Error);
}

TEST(Power, AgreesWithIteratedCompose) {
  for (auto kind : {SystemKind::kT11, SystemKind::kT12, SystemKind::kT13}) {
    for (const auto& g : BuiltinSystem(kind).generators) {
      for (int n = -6; n <= 6; ++n) {
        ASSERT_EQ(Power(g.map, n), NaivePower(g.map, n)) << g.name << " n=" << n;
      }
      EXPECT_TRUE(Compose(Power(g.map, -1), g.map).IsIdentity());
      EXPECT_TRUE(Power(g.map, 0).IsIdentity());
    }
  }
}

TEST(Power, T13CoordinateFormula) {
  const auto t1 = BuiltinSystem(SystemKind::kT13).generators[0].map;
  for (int n = 1; n <= 6; ++n) {
    const auto p = Power(t1, n);
    // y -> y + n x + binom(n, 2) alpha
    EXPECT_EQ(p.matrix()(1, 0), n);
    EXPECT_EQ(p.matrix()(1, 1), 1);
    EXPECT_EQ(p.translation()[1], (n * (n - 1) / 2) * kA);
    EXPECT_EQ(p.translation()[0], n * kA);
  }
}

TEST(Commutator, T13) {
  const auto s = BuiltinSystem(SystemKind::kT13);
  const auto& t1 = s.generators[0].map;
  const auto& t2 = s.generators[1].map;
  const auto c = Commutator(t1, t2);
  EXPECT_EQ(c, AffineTorusMap(IntMatrix::Identity(3), {SymScalar(), kA, -kA}));
  EXPECT_TRUE(Commutator(t1, c).IsIdentity());
  EXPECT_TRUE(Commutator(t2, c).IsIdentity());
  EXPECT_EQ(Compose(c, t1), Compose(t1, c));
  EXPECT_EQ(Compose(c, t2), Compose(t2, c));
  // Reversed order gives the inverse.
  EXPECT_TRUE(Compose(Commutator(t2, t1), c).IsIdentity());
  // The sign in the textbook shortcut is off for this pair.
  EXPECT_NE(CommutatorShortcut(t1, t2), c);
}

TEST(Commutator, TranslationsCommute) {
  const AffineTorusMap a(IntMatrix::Identity(2), {kA, SymScalar()});
  const AffineTorusMap b(IntMatrix::Identity(2), {SymScalar(Rational(1, 3)), kB});
  EXPECT_TRUE(Commutator(a, b).IsIdentity());
}

TEST(Commutator, GroupIdentityOnRandomPairs) {
  for (auto kind : {SystemKind::kT11, SystemKind::kT12, SystemKind::kT13}) {
    const auto gens = Generators(BuiltinSystem(kind));
    for (const auto& g : gens) {
      for (const auto& h : gens) {
        EXPECT_TRUE(Compose(Commutator(h, g), Commutator(g, h)).IsIdentity());
      }
    }
  }
}

TEST(CheckCommute, BuiltinSystems) {
  for (auto kind : {SystemKind::kT11, SystemKind::kT12}) {
    const auto gens = Generators(BuiltinSystem(kind));
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t j = 0; j < gens.size(); ++j) {
        const auto r = CheckCommute(gens[i], gens[j]);
        EXPECT_TRUE(r.commute);
        EXPECT_TRUE(r.criterion_applicable);
        EXPECT_TRUE(r.criterion);
      }
    }
  }
  const auto t12 = BuiltinSystem(SystemKind::kT12);
  const auto p = Compose(t12.generators[0].map, t12.generators[2].map);
  // z -> z + x + y + alpha
  EXPECT_EQ(p.matrix()(2, 0), 1);
  EXPECT_EQ(p.matrix()(2, 1), 1);
  EXPECT_EQ(p.translation()[2], kA);
  const auto t13 = Generators(BuiltinSystem(SystemKind::kT13));
  const auto r = CheckCommute(t13[0], t13[1]);
  EXPECT_FALSE(r.commute);
  EXPECT_FALSE(r.criterion);
}

TEST(NilpotencyClass, Examples) {
  EXPECT_EQ(NilpotencyClass(Generators(BuiltinSystem(SystemKind::kT13)), 6), 2);
  EXPECT_EQ(NilpotencyClass(Generators(BuiltinSystem(SystemKind::kT11)), 6), 1);
  EXPECT_EQ(NilpotencyClass(Generators(BuiltinSystem(SystemKind::kT12)), 6), 1);
  const AffineTorusMap rot(IntMatrix::Identity(1), {kA});
  EXPECT_EQ(NilpotencyClass(std::vector<AffineTorusMap>{rot}, 3), 1);
  // x -> x + a, y -> y + x, z -> z + y: a 3-step group with the translation
  // by (0, 0, b).
  const AffineTorusMap u(IntMatrix{{1, 0, 0}, {1, 1, 0}, {0, 1, 1}}, {kA, SymScalar(), SymScalar()});
  const AffineTorusMap v(IntMatrix::Identity(3), {kB, SymScalar(), SymScalar()});
  EXPECT_EQ(NilpotencyClass(std::vector<AffineTorusMap>{u, v}, 6), 3);
  EXPECT_EQ(NilpotencyClass(std::vector<AffineTorusMap>{u, v}, 2), std::nullopt);
}

TEST(ShiftReduction, T11AtOne) {
  const auto red = ReduceShifts(BuiltinSystem(SystemKind::kT11), 1);
  EXPECT_TRUE(red.full_rank);
  EXPECT_EQ(red.m, (IntMatrix{{1, 0, 0}, {1, 1, 1}, {0, 0, 1}}));
  ASSERT_EQ(red.discrepancies.size(), 1u);
  EXPECT_NE(red.discrepancies[0].find("y2"), std::string::npos);
}

TEST(ShiftReduction, T13AndT12) {
  auto red = ReduceShifts(BuiltinSystem(SystemKind::kT13), 2);
  EXPECT_EQ(red.m, (IntMatrix{{2}}));
  EXPECT_TRUE(red.full_rank);
  EXPECT_TRUE(red.discrepancies.empty());
  for (int n = 1; n <= 4; ++n) {
    red = ReduceShifts(BuiltinSystem(SystemKind::kT12), n);
    EXPECT_EQ(red.m, (IntMatrix{{0, n}, {n, 0}}));
    EXPECT_TRUE(red.full_rank);
    EXPECT_EQ(red.table.at(2, 0).coeff, 2);
    EXPECT_TRUE(red.discrepancies.empty());
  }
}

TEST(ShiftReduction, ZeroIterate) {
  for (auto kind : {SystemKind::kT11, SystemKind::kT12, SystemKind::kT13}) {
    const auto red = ReduceShifts(BuiltinSystem(kind), 0);
    EXPECT_FALSE(red.full_rank);
    EXPECT_TRUE(red.m.IsZero());
    EXPECT_GT(red.m.rows(), 0u);
  }
}

TEST(ShiftReduction, OffsetsFollowBinomial) {
  for (auto kind : {SystemKind::kT11, SystemKind::kT12, SystemKind::kT13}) {
    const auto s = BuiltinSystem(kind);
    for (int n = 1; n <= 6; ++n) {
      const auto red = ReduceShifts(s, n);
      const int rows = static_cast<int>(s.indicator_coordinates.size());
      for (const auto& d : s.declared) {
        EXPECT_EQ(red.offsets[static_cast<std::size_t>(d.role * rows + d.row)],
                  (n * (n - 1) / 2) * d.offset);
      }
    }
  }
}

TEST(ShiftReduction, RejectsMixingIterates) {
  auto s = BuiltinSystem(SystemKind::kT13);
  // y -> y + z couples the two indicator coordinates.
  s.generators[0].map = AffineTorusMap(IntMatrix{{1, 0, 0}, {0, 1, 1}, {0, 0, 1}},
                                       {kA, SymScalar(), SymScalar()});
  EXPECT_THROW(ReduceShifts(s, 1), Error);
}

TEST(Orbit, RotationEquidistributes) {
  const AffineTorusMap rot(IntMatrix::Identity(1), {kA});
  OrbitConfig config;
  config.steps = 100000;
  config.grid = 100;
  const double start[] = {0.0};
  const auto r = OrbitStatistics(std::vector<AffineTorusMap>{rot}, start, config);
  EXPECT_LT(r.discrepancy, 0.02);
}

TEST(Orbit, IdentityConcentrates) {
  OrbitConfig config;
  config.steps = 1000;
  config.grid = 100;
  const double start[] = {0.5};
  const auto r =
      OrbitStatistics(std::vector<AffineTorusMap>{AffineTorusMap::Identity(1)}, start, config);
  EXPECT_NEAR(r.discrepancy, 1.0 - 1.0 / 100, 1e-12);
}

TEST(Orbit, T12RandomWords) {
  const auto s = BuiltinSystem(SystemKind::kT12);
  const std::vector<AffineTorusMap> gens{s.generators[0].map, s.generators[2].map};
  OrbitConfig config;
  config.steps = 1000000;
  config.grid = 10;
  config.random_words = true;
  config.seed = 7;
  const double start[] = {0.1, 0.2, 0.3};
  const auto r = OrbitStatistics(gens, start, config);
  // Threshold from an empirical run (about 0.03), with headroom.
  EXPECT_LT(r.discrepancy, 0.08);
}

}  // namespace
}  // namespace nilrec::dynamics
