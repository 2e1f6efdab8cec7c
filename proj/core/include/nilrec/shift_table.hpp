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

#ifndef NILREC_SHIFT_TABLE_HPP_
#define NILREC_SHIFT_TABLE_HPP_

#include <cstdint>
#include <vector>

namespace nilrec::torus {

// Role r constrains coordinate j of the set to y_j + coeff * s_param, where
// s_param is a Haar-distributed shift parameter. param < 0 (with coeff 0)
// means the coordinate is read unshifted.
struct ShiftTerm {
  int param = -1;
  std::int64_t coeff = 0;

  bool shifted() const { return param >= 0; }
  friend bool operator==(const ShiftTerm&, const ShiftTerm&) = default;
};

// Shift structure of an intersection A ∩ T_1^{-n} A ∩ ... after replacing
// the averaged torus variables by independent uniform shift parameters.
class ShiftConstraintTable {
 public:
  ShiftConstraintTable(int roles, int rows, int params,
                       std::vector<ShiftTerm> entries);
  static ShiftConstraintTable Unshifted(int roles, int rows);

  int roles() const { return roles_; }
  int rows() const { return rows_; }
  int params() const { return params_; }
  const ShiftTerm& at(int role, int row) const {
    return entries_[static_cast<std::size_t>(role * rows_ + row)];
  }

  friend bool operator==(const ShiftConstraintTable&,
                         const ShiftConstraintTable&) = default;

 private:
  int roles_;
  int rows_;
  int params_;
  std::vector<ShiftTerm> entries_;
};

}  // namespace nilrec::torus

#endif  // NILREC_SHIFT_TABLE_HPP_
