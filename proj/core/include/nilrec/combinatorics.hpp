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

#ifndef NILREC_COMBINATORICS_HPP_
#define NILREC_COMBINATORICS_HPP_

#include <cstdint>
#include <vector>

#include "nilrec/int_matrix.hpp"
#include "nilrec/numeric.hpp"
#include "nilrec/point_set.hpp"

namespace nilrec::combinatorics {

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

// Digit layout of the corner-free construction: points of [0, base^digits)^2
// whose base-(2d-1) digit pairs use only digits < d, with every pair (i, j)
// occurring exactly `multiplicity` times.
class DigitProfile {
 public:
  // Throws kDomain unless d >= 2 and multiplicity >= 1.
  DigitProfile(int d, int multiplicity);

  int d() const { return d_; }
  int multiplicity() const { return m_; }
  int digits() const { return d_ * d_ * m_; }
  int base() const { return 2 * d_ - 1; }
  // base^digits, the side of the ambient square.
  BigInt side() const;

  friend bool operator==(const DigitProfile&, const DigitProfile&) = default;

 private:
  int d_;
  int m_;
};

// Multiplicity schedule m = omega(d) used when choosing a profile for a
// target side length.
int Omega(int d);

struct ParameterChoice {
  DigitProfile profile;
  // True when even the smallest profile (d=2, m=1) exceeds the target N.
  bool oversized;
};

// Largest profile (d, Omega(d)) with (2d-1)^(d^2 Omega(d)) <= n. Requires
// n >= 3.
ParameterChoice ChooseParameters(std::uint64_t n);

// n! / (m!)^(d^2).
BigInt CornerFreeCardinality(const DigitProfile& p);

bool CornerFreeContains(const DigitProfile& p, std::uint64_t x,
                        std::uint64_t y);

// All members, certified corner-free by the brute-force oracle. Throws
// kSizeCap when the cardinality exceeds `cap`.
LatticePointSet CornerFreeEnumerate(const DigitProfile& p,
                                    std::uint64_t cap = kDefaultEnumerationCap);

struct SliceSelection {
  std::int64_t s = 0;
  // slice_sizes[s] = |V_s| for s in [0, 3N-3].
  std::vector<std::uint64_t> slice_sizes;
};

struct SliceResult {
  LatticePointSet slice;
  SliceSelection selection;
};

// Lifts a certified corner-free set to V = Lambda x [N] and returns the
// largest plane section x + y + z = s (smallest s on ties), certified three
// point free.
SliceResult ThreePointFreeFromCornerFree(const LatticePointSet& lambda);

struct BehrendConstruction {
  LatticePointSet set;
  int d = 0;
  int digits = 0;
  // True for the d = 2 case where the whole {0,1}-digit cube is used.
  bool full_cube = false;
  std::int64_t radius_sq = 0;
};

// AP3-free subset of [0, n) from digit vectors with digits < d in base 2d-1
// lying on one sphere (or the whole {0,1} cube when d = 2). Every element is
// below n/2, so the set is AP3-free modulo n as well.
BehrendConstruction BehrendConstructDetailed(
    std::uint64_t n, std::uint64_t cap = kDefaultEnumerationCap);
LatticePointSet BehrendAp3Construct(std::uint64_t n,
                                    std::uint64_t cap = kDefaultEnumerationCap);

// a(i, j) = k + 1 for (i, j, k) in V and 0 on empty Z-lines.
IntMatrix ThreePointFreeToMatrix(const LatticePointSet& v);
LatticePointSet MatrixToThreePointFree(const IntMatrix& m);

}  // namespace nilrec::combinatorics

#endif  // NILREC_COMBINATORICS_HPP_
