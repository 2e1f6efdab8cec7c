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

#ifndef NILREC_MEASURE_HPP_
#define NILREC_MEASURE_HPP_

#include <span>

#include "nilrec/numeric.hpp"
#include "nilrec/piecewise.hpp"
#include "nilrec/shift_table.hpp"
#include "nilrec/torus_geometry.hpp"

namespace nilrec::torus {

// One indicator factor restricted to a single coordinate:
// y + coeff * s_param must lie in target.
struct RowConstraint {
  Interval target;
  int param = -1;
  std::int64_t coeff = 0;
};

// Length of { y in T : y + coeff_r * c in target_r for all r } at a fixed c.
Rational ArcIntersectionLength(std::span<const RowConstraint> row,
                               const Rational& c);

// The same length as an exact piecewise-linear function of c on [0, 1).
// Throws kStructure when the row mixes two different shift parameters.
PiecewisePolynomial OverlapProfile(std::span<const RowConstraint> row);

// Exact measure of the intersection over all ordered tuples of boxes, one
// box per role. Preconditions (kStructure otherwise): each row touches at
// most one shift parameter and distinct rows touch distinct parameters.
// Roles whose every row carries a private parameter are integrated out
// first and contribute a factor mu(B) each.
Rational TripleIntersectionMeasureFactorized(const BoxUnion& boxes,
                                             const ShiftConstraintTable& table,
                                             int jobs = 1);

// As above for tables with a single shift parameter shared across rows.
Rational TripleIntersectionMeasureSharedShift(const BoxUnion& boxes,
                                              const ShiftConstraintTable& table,
                                              int jobs = 1);

// Accepts any table where every row touches at most one parameter; groups
// rows by parameter and integrates each group's product of profiles.
Rational IntersectionMeasure(const BoxUnion& boxes,
                             const ShiftConstraintTable& table, int jobs = 1);

}  // namespace nilrec::torus

#endif  // NILREC_MEASURE_HPP_
