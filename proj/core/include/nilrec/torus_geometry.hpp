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

#ifndef NILREC_TORUS_GEOMETRY_HPP_
#define NILREC_TORUS_GEOMETRY_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "nilrec/numeric.hpp"
#include "nilrec/point_set.hpp"

namespace nilrec::torus {

// Half-open [lo, hi) with 0 <= lo < hi <= 1.
struct Interval {
  Rational lo;
  Rational hi;

  Interval(Rational lo_in, Rational hi_in);

  Rational length() const { return hi - lo; }
  bool Overlaps(const Interval& other) const {
    return lo < other.hi && other.lo < hi;
  }

  friend bool operator==(const Interval&, const Interval&) = default;
};

// Length of the intersection of two intervals of [0, 1).
Rational OverlapLength(const Interval& a, const Interval& b);

// Finite union of intervals of the circle, normalized to sorted, disjoint,
// non-adjacent pieces.
class IntervalUnion {
 public:
  IntervalUnion() = default;
  explicit IntervalUnion(std::vector<Interval> intervals);

  std::span<const Interval> intervals() const { return intervals_; }
  Rational measure() const;

 private:
  std::vector<Interval> intervals_;
};

using Box = std::vector<Interval>;

// Pairwise disjoint axis-aligned boxes of T^dim.
class BoxUnion {
 public:
  BoxUnion(int dim, std::vector<Box> boxes);

  int dim() const { return dim_; }
  std::size_t size() const { return boxes_.size(); }
  bool empty() const { return boxes_.empty(); }
  std::span<const Box> boxes() const { return boxes_; }
  const Box& operator[](std::size_t i) const { return boxes_[i]; }

  Rational measure() const;
  static Rational Volume(const Box& box);

  // Floating-point membership for sampling; coords must lie in [0, 1).
  bool ContainsApprox(std::span<const double> coords) const;

 private:
  int dim_;
  std::vector<Box> boxes_;
  std::vector<double> lo_;
  std::vector<double> hi_;
  std::vector<std::vector<std::uint32_t>> buckets_;
};

// One box [a/N, a/N + 1/(2N)) x ... per point of `set`.
BoxUnion BoxUnionFromSet(const LatticePointSet& set, std::int64_t n);

}  // namespace nilrec::torus

#endif  // NILREC_TORUS_GEOMETRY_HPP_
