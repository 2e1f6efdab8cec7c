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

#include "nilrec/torus_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nilrec/error.hpp"

namespace nilrec::torus {
namespace {

constexpr std::size_t kBuckets = 1024;

}  // namespace

Interval::Interval(Rational lo_in, Rational hi_in)
    : lo(std::move(lo_in)), hi(std::move(hi_in)) {
  if (lo < 0 || hi > 1 || !(lo < hi)) {
    throw Error(Errc::kRange, "interval [" + ToFractionString(lo) + ", " +
                                  ToFractionString(hi) +
                                  ") is not a nonempty subset of [0, 1)");
  }
}

Rational OverlapLength(const Interval& a, const Interval& b) {
  const Rational& lo = a.lo > b.lo ? a.lo : b.lo;
  const Rational& hi = a.hi < b.hi ? a.hi : b.hi;
  return lo < hi ? Rational(hi - lo) : Rational(0);
}

IntervalUnion::IntervalUnion(std::vector<Interval> intervals) {
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (auto& iv : intervals) {
    if (!intervals_.empty() && iv.lo <= intervals_.back().hi) {
      if (iv.hi > intervals_.back().hi) intervals_.back().hi = iv.hi;
    } else {
      intervals_.push_back(std::move(iv));
    }
  }
}

Rational IntervalUnion::measure() const {
  Rational total = 0;
  for (const auto& iv : intervals_) total += iv.length();
  return total;
}

BoxUnion::BoxUnion(int dim, std::vector<Box> boxes)
    : dim_(dim), boxes_(std::move(boxes)), buckets_(kBuckets) {
  if (dim_ < 1) throw Error(Errc::kDimension, "box union needs dim >= 1");
  for (const auto& box : boxes_) {
    if (static_cast<int>(box.size()) != dim_) {
      throw Error(Errc::kDimension, "box has wrong number of sides");
    }
  }
  // Disjointness: only boxes whose first sides overlap can meet, so sweep
  // in order of the first lower endpoint.
  std::vector<std::size_t> order(boxes_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return boxes_[a][0].lo < boxes_[b][0].lo;
  });
  for (std::size_t a = 0; a < order.size(); ++a) {
    const Box& first = boxes_[order[a]];
    for (std::size_t b = a + 1; b < order.size(); ++b) {
      const Box& second = boxes_[order[b]];
      if (!(second[0].lo < first[0].hi)) break;
      bool meet = true;
      for (int k = 0; k < dim_ && meet; ++k) meet = first[k].Overlaps(second[k]);
      if (meet) throw Error(Errc::kStructure, "boxes of a union must be disjoint");
    }
  }

  lo_.reserve(boxes_.size() * dim_);
  hi_.reserve(boxes_.size() * dim_);
  for (std::size_t i = 0; i < boxes_.size(); ++i) {
    for (const auto& side : boxes_[i]) {
      lo_.push_back(side.lo.get_d());
      hi_.push_back(side.hi.get_d());
    }
    const double lo0 = boxes_[i][0].lo.get_d();
    const double hi0 = boxes_[i][0].hi.get_d();
    const auto first = static_cast<std::size_t>(std::floor(lo0 * kBuckets));
    auto last = static_cast<std::size_t>(std::ceil(hi0 * kBuckets));
    last = std::min(last, kBuckets);
    for (std::size_t b = first; b < std::max(last, first + 1) && b < kBuckets;
         ++b) {
      buckets_[b].push_back(static_cast<std::uint32_t>(i));
    }
  }
}

Rational BoxUnion::Volume(const Box& box) {
  Rational v = 1;
  for (const auto& side : box) v *= side.length();
  return v;
}

Rational BoxUnion::measure() const {
  Rational total = 0;
  for (const auto& box : boxes_) total += Volume(box);
  return total;
}

bool BoxUnion::ContainsApprox(std::span<const double> coords) const {
  const auto bucket = std::min(
      static_cast<std::size_t>(coords[0] * static_cast<double>(kBuckets)),
      kBuckets - 1);
  for (const std::uint32_t i : buckets_[bucket]) {
    bool inside = true;
    for (int k = 0; k < dim_ && inside; ++k) {
      const double c = coords[k];
      inside = lo_[i * dim_ + k] <= c && c < hi_[i * dim_ + k];
    }
    if (inside) return true;
  }
  return false;
}

BoxUnion BoxUnionFromSet(const LatticePointSet& set, std::int64_t n) {
  if (n < 1) throw Error(Errc::kRange, "grid size must be positive");
  const Rational step(1, static_cast<unsigned long>(n));
  const Rational half(1, 2 * static_cast<unsigned long>(n));
  std::vector<Box> boxes;
  boxes.reserve(set.size());
  for (const auto& p : set.points()) {
    Box box;
    for (int k = 0; k < set.dim(); ++k) {
      if (p[k] >= n) {
        throw Error(Errc::kRange, "coordinate " + std::to_string(p[k]) +
                                      " is not below N = " + std::to_string(n));
      }
      const Rational lo = step * static_cast<long>(p[k]);
      box.emplace_back(lo, lo + half);
    }
    boxes.push_back(std::move(box));
  }
  return BoxUnion(set.dim(), std::move(boxes));
}

}  // namespace nilrec::torus
