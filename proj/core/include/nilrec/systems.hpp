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

#ifndef NILREC_SYSTEMS_HPP_
#define NILREC_SYSTEMS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "nilrec/affine_map.hpp"
#include "nilrec/int_matrix.hpp"
#include "nilrec/shift_table.hpp"

namespace nilrec::dynamics {

enum class SystemKind { kT11, kT12, kT13 };

const char* SystemKindName(SystemKind kind);
// Accepts "t11", "t12", "t13"; throws kParse otherwise.
SystemKind ParseSystemKind(const std::string& text);

struct NamedMap {
  std::string name;
  AffineTorusMap map;
};

// Closed-form n-th power shift of one indicator coordinate as written for a
// system: y_row + n * <form, averaged vars> + binom(n, 2) * offset.
struct DeclaredShift {
  int role;
  int row;
  std::vector<std::int64_t> form;
  SymScalar offset;
};

struct RecurrenceSystem {
  SystemKind kind;
  std::vector<std::string> coordinates;
  std::vector<NamedMap> generators;
  // Generator index per indicator factor; -1 is the identity factor.
  std::vector<int> roles;
  // Coordinates that carry the set B; the rest are averaged over.
  std::vector<int> indicator_coordinates;
  std::vector<int> averaged_coordinates;
  bool commuting = false;
  std::vector<DeclaredShift> declared;

  std::size_t dim() const { return coordinates.size(); }
  AffineTorusMap RoleMap(int role) const;
  std::string RoleName(int role) const;
};

RecurrenceSystem BuiltinSystem(SystemKind kind);

struct ShiftReduction {
  // One row per shift parameter, one column per averaged coordinate.
  IntMatrix m;
  // Constant part of each (role, row) shift, flattened role-major.
  std::vector<SymScalar> offsets;
  bool full_rank = false;
  torus::ShiftConstraintTable table;
  // Mismatches against the system's declared closed forms.
  std::vector<std::string> discrepancies;
};

// Throws kConsistency when an iterate mixes indicator coordinates or the
// constant offsets cannot be absorbed by translating the parameters.
ShiftReduction ReduceShifts(const RecurrenceSystem& system, std::int64_t n);

}  // namespace nilrec::dynamics

#endif  // NILREC_SYSTEMS_HPP_
