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

#include <algorithm>
#include <numeric>
#include <sstream>

#include "nilrec/error.hpp"
#include "nilrec/numeric.hpp"
#include "nilrec/systems.hpp"

namespace nilrec::dynamics {

namespace {

struct Direction {
  std::vector<std::int64_t> primitive;
  std::int64_t base = 0;  // gcd of the multiples seen so far
};

std::string FormString(const RecurrenceSystem& s,
                       const std::vector<std::int64_t>& form) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t v = 0; v < form.size(); ++v) {
    if (form[v] == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (form[v] != 1) out << form[v] << "*";
    out << s.coordinates[static_cast<std::size_t>(s.averaged_coordinates[v])];
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace

ShiftReduction ReduceShifts(const RecurrenceSystem& system, std::int64_t n) {
  const int roles = static_cast<int>(system.roles.size());
  const int rows = static_cast<int>(system.indicator_coordinates.size());
  const std::size_t vars = system.averaged_coordinates.size();

  // Per (role, row): linear form over the averaged coordinates and offset.
  std::vector<std::vector<std::int64_t>> forms;
  std::vector<SymScalar> offsets;
  for (int r = 0; r < roles; ++r) {
    const AffineTorusMap p = Power(system.RoleMap(r), n);
    for (int j = 0; j < rows; ++j) {
      const auto c = static_cast<std::size_t>(system.indicator_coordinates[j]);
      for (int k = 0; k < rows; ++k) {
        const auto ck = static_cast<std::size_t>(system.indicator_coordinates[k]);
        if (p.matrix()(c, ck) != (j == k ? 1 : 0)) {
          throw Error(Errc::kConsistency,
                      "iterate of " + system.RoleName(r) +
                          " mixes indicator coordinates");
        }
      }
      std::vector<std::int64_t> form(vars);
      for (std::size_t v = 0; v < vars; ++v) {
        form[v] = p.matrix()(c, static_cast<std::size_t>(system.averaged_coordinates[v]));
      }
      forms.push_back(std::move(form));
      offsets.push_back(p.translation()[c]);
    }
  }

  // Group the forms by primitive direction; each direction is one parameter.
  std::vector<Direction> dirs;
  std::vector<int> dir_of(forms.size(), -1);
  std::vector<std::int64_t> multiple(forms.size(), 0);
  for (std::size_t e = 0; e < forms.size(); ++e) {
    const auto& f = forms[e];
    std::int64_t g = 0;
    for (auto v : f) g = std::gcd(g, v);
    if (g == 0) continue;
    std::vector<std::int64_t> prim(vars);
    const auto lead = *std::find_if(f.begin(), f.end(), [](auto v) { return v != 0; });
    if (lead < 0) g = -g;
    for (std::size_t v = 0; v < vars; ++v) prim[v] = f[v] / g;
    int d = 0;
    for (; d < static_cast<int>(dirs.size()); ++d) {
      if (dirs[static_cast<std::size_t>(d)].primitive == prim) break;
    }
    if (d == static_cast<int>(dirs.size())) dirs.push_back({prim, 0});
    auto& dir = dirs[static_cast<std::size_t>(d)];
    dir.base = std::gcd(dir.base, g);
    dir_of[e] = d;
    multiple[e] = g;
  }

  ShiftReduction out{IntMatrix(dirs.size(), vars),
                     offsets,
                     false,
                     torus::ShiftConstraintTable::Unshifted(roles, rows),
                     {}};
  std::vector<torus::ShiftTerm> entries(forms.size());
  for (std::size_t e = 0; e < forms.size(); ++e) {
    if (dir_of[e] < 0) continue;
    const auto& dir = dirs[static_cast<std::size_t>(dir_of[e])];
    entries[e] = {dir_of[e], multiple[e] / dir.base};
  }
  for (std::size_t d = 0; d < dirs.size(); ++d) {
    for (std::size_t v = 0; v < vars; ++v) {
      out.m(d, v) = dirs[d].primitive[v] * dirs[d].base;
    }
  }
  out.table = torus::ShiftConstraintTable(roles, rows, static_cast<int>(dirs.size()),
                                          std::move(entries));

  if (n == 0) {
    // Every form vanishes; report the generic parameter layout with rank 0.
    out.m = IntMatrix(ReduceShifts(system, 1).m.rows(), vars);
  } else {
    out.full_rank = RankOverQ(out.m) == dirs.size();
  }

  // Offsets sharing a parameter must be proportional to their multiples, so
  // one translation of that parameter absorbs all of them.
  for (std::size_t e = 0; e < forms.size(); ++e) {
    const auto& te = out.table.at(static_cast<int>(e) / rows, static_cast<int>(e) % rows);
    if (!te.shifted()) {
      if (!offsets[e].IsZero()) {
        throw Error(Errc::kConsistency, "constant offset on an unshifted row");
      }
      continue;
    }
    for (std::size_t f = 0; f < e; ++f) {
      const auto& tf = out.table.at(static_cast<int>(f) / rows, static_cast<int>(f) % rows);
      if (tf.param != te.param) continue;
      if (tf.coeff * offsets[e] != te.coeff * offsets[f]) {
        throw Error(Errc::kConsistency,
                    "offsets sharing a parameter are not proportional");
      }
    }
  }

  const BigInt b2 = Binomial2(n);
  for (const auto& decl : system.declared) {
    const auto e = static_cast<std::size_t>(decl.role * rows + decl.row);
    std::vector<std::int64_t> expected(vars);
    for (std::size_t v = 0; v < vars; ++v) expected[v] = n * decl.form[v];
    const SymScalar expected_offset = b2 * decl.offset;
    const std::string where =
        system.RoleName(decl.role) + " on " +
        system.coordinates[static_cast<std::size_t>(system.indicator_coordinates[decl.row])];
    if (expected != forms[e]) {
      out.discrepancies.push_back(where + ": declared shift " +
                                  FormString(system, expected) + ", computed " +
                                  FormString(system, forms[e]));
    }
    if (!(expected_offset == offsets[e])) {
      out.discrepancies.push_back(where + ": declared offset " +
                                  expected_offset.ToString() + ", computed " +
                                  offsets[e].ToString());
    }
  }
  return out;
}

}  // namespace nilrec::dynamics
