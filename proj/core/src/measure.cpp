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

#include "nilrec/measure.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <thread>
#include <utility>

#include "nilrec/error.hpp"

namespace nilrec::torus {

ShiftConstraintTable::ShiftConstraintTable(int roles, int rows, int params,
                                           std::vector<ShiftTerm> entries)
    : roles_(roles), rows_(rows), params_(params), entries_(std::move(entries)) {
  if (roles_ < 1 || rows_ < 1 || params_ < 0) {
    throw Error(Errc::kStructure, "shift table needs roles, rows >= 1");
  }
  if (entries_.size() != static_cast<std::size_t>(roles_ * rows_)) {
    throw Error(Errc::kStructure, "shift table needs roles * rows entries");
  }
  for (const auto& e : entries_) {
    if (e.param >= params_) {
      throw Error(Errc::kStructure, "shift term references unknown parameter");
    }
    if (e.shifted() != (e.coeff != 0)) {
      throw Error(Errc::kStructure,
                  "shift term needs a parameter exactly when coeff != 0");
    }
  }
}

ShiftConstraintTable ShiftConstraintTable::Unshifted(int roles, int rows) {
  return ShiftConstraintTable(
      roles, rows, 0,
      std::vector<ShiftTerm>(static_cast<std::size_t>(roles * rows)));
}

namespace {

using Piece = std::pair<Rational, Rational>;

// Sorted disjoint pieces of [0, 1) covered by the arc starting at `start`.
std::vector<Piece> Unwrap(const Rational& start, const Rational& length) {
  const Rational end = start + length;
  if (end <= 1) return {{start, end}};
  std::vector<Piece> out;
  if (end - 1 > 0) out.emplace_back(Rational(0), end - 1);
  out.emplace_back(start, Rational(1));
  return out;
}

std::vector<Piece> Intersect(const std::vector<Piece>& a,
                             const std::vector<Piece>& b) {
  std::vector<Piece> out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    const Rational& lo = a[i].first > b[j].first ? a[i].first : b[j].first;
    const Rational& hi = a[i].second < b[j].second ? a[i].second : b[j].second;
    if (lo < hi) out.emplace_back(lo, hi);
    if (a[i].second < b[j].second) {
      ++i;
    } else {
      ++j;
    }
  }
  return out;
}

std::optional<int> RowParam(std::span<const RowConstraint> row) {
  std::optional<int> param;
  for (const auto& rc : row) {
    if (rc.coeff == 0) continue;
    if (param && *param != rc.param) {
      throw Error(Errc::kStructure,
                  "row mixes two shift parameters; use a factorized pattern");
    }
    param = rc.param;
  }
  return param;
}

Rational CommonLength(std::span<const Interval* const> sides) {
  const Rational* lo = &sides[0]->lo;
  const Rational* hi = &sides[0]->hi;
  for (const Interval* s : sides) {
    if (s->lo > *lo) lo = &s->lo;
    if (s->hi < *hi) hi = &s->hi;
  }
  return *lo < *hi ? Rational(*hi - *lo) : Rational(0);
}

struct PreparedTable {
  ShiftConstraintTable table;  // free roles removed
  int free_roles = 0;
  // param_of_row[j] is the only parameter row j touches, or -1.
  std::vector<int> param_of_row;
  // rows_of_param[p] lists the rows touching parameter p.
  std::vector<std::vector<int>> rows_of_param;
};

PreparedTable Prepare(const ShiftConstraintTable& table) {
  // Count how often each parameter occurs over all (role, row) entries.
  std::vector<int> uses(table.params(), 0);
  for (int r = 0; r < table.roles(); ++r) {
    for (int j = 0; j < table.rows(); ++j) {
      if (table.at(r, j).shifted()) ++uses[table.at(r, j).param];
    }
  }
  std::vector<int> kept;
  int free_roles = 0;
  for (int r = 0; r < table.roles(); ++r) {
    bool free = true;
    for (int j = 0; j < table.rows() && free; ++j) {
      const auto& e = table.at(r, j);
      free = e.shifted() && uses[e.param] == 1;
    }
    if (free) {
      ++free_roles;
    } else {
      kept.push_back(r);
    }
  }
  if (kept.empty()) {
    kept.push_back(0);
    --free_roles;
  }

  std::vector<ShiftTerm> entries;
  for (int r : kept) {
    for (int j = 0; j < table.rows(); ++j) entries.push_back(table.at(r, j));
  }
  PreparedTable out{ShiftConstraintTable(static_cast<int>(kept.size()),
                                         table.rows(), table.params(),
                                         std::move(entries)),
                    free_roles,
                    std::vector<int>(table.rows(), -1),
                    std::vector<std::vector<int>>(table.params())};
  for (int j = 0; j < out.table.rows(); ++j) {
    for (int r = 0; r < out.table.roles(); ++r) {
      const auto& e = out.table.at(r, j);
      if (!e.shifted()) continue;
      if (out.param_of_row[j] >= 0 && out.param_of_row[j] != e.param) {
        throw Error(Errc::kStructure,
                    "row " + std::to_string(j) +
                        " touches more than one shift parameter");
      }
      out.param_of_row[j] = e.param;
    }
    if (out.param_of_row[j] >= 0) {
      out.rows_of_param[out.param_of_row[j]].push_back(j);
    }
  }
  return out;
}

// Mass of one ordered tuple of boxes (one per kept role).
Rational TupleMass(const PreparedTable& prep,
                   std::span<const Box* const> tuple) {
  const auto& table = prep.table;
  const int roles = table.roles();
  std::vector<const Interval*> sides(roles);
  Rational mass = 1;

  for (int j = 0; j < table.rows(); ++j) {
    if (prep.param_of_row[j] >= 0) continue;
    for (int r = 0; r < roles; ++r) sides[r] = &(*tuple[r])[j];
    mass *= CommonLength(sides);
    if (mass == 0) return mass;
  }

  for (const auto& rows : prep.rows_of_param) {
    if (rows.empty()) continue;
    if (rows.size() == 1) {
      // Closed form when the row uses at most one nonzero coefficient: the
      // shifted roles see a uniformly translated copy of y.
      const int j = rows[0];
      std::optional<std::int64_t> kappa;
      bool single = true;
      for (int r = 0; r < roles && single; ++r) {
        const auto c = table.at(r, j).coeff;
        if (c == 0) continue;
        if (kappa && *kappa != c) single = false;
        kappa = c;
      }
      if (single) {
        std::vector<const Interval*> fixed;
        std::vector<const Interval*> moving;
        for (int r = 0; r < roles; ++r) {
          (table.at(r, j).coeff == 0 ? fixed : moving)
              .push_back(&(*tuple[r])[j]);
        }
        if (!fixed.empty()) mass *= CommonLength(fixed);
        if (mass != 0) mass *= CommonLength(moving);
        if (mass == 0) return mass;
        continue;
      }
    }
    std::vector<PiecewisePolynomial> profiles;
    profiles.reserve(rows.size());
    for (const int j : rows) {
      std::vector<RowConstraint> row;
      row.reserve(roles);
      for (int r = 0; r < roles; ++r) {
        const auto& e = table.at(r, j);
        row.push_back({(*tuple[r])[j], e.param, e.coeff});
      }
      profiles.push_back(OverlapProfile(row));
    }
    mass *= IntegrateProduct(profiles);
    if (mass == 0) return mass;
  }
  return mass;
}

// Enumerates tuples that can carry mass: roles reading a row with the same
// shift term must pick boxes whose sides on that row overlap.
Rational SumOverTuples(const BoxUnion& boxes, const PreparedTable& prep,
                       int jobs) {
  const auto& table = prep.table;
  const int roles = table.roles();
  const std::size_t count = boxes.size();
  if (count == 0) return Rational(0);

  // neighbours[j][i]: boxes whose side j overlaps side j of box i.
  std::vector<std::vector<std::vector<std::uint32_t>>> neighbours(
      table.rows(), std::vector<std::vector<std::uint32_t>>(count));
  for (int j = 0; j < table.rows(); ++j) {
    std::vector<std::uint32_t> order(count);
    for (std::size_t i = 0; i < count; ++i) order[i] = static_cast<std::uint32_t>(i);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) {
      return boxes[a][j].lo < boxes[b][j].lo;
    });
    for (std::size_t a = 0; a < count; ++a) {
      const auto ia = order[a];
      neighbours[j][ia].push_back(ia);
      for (std::size_t b = a + 1; b < count; ++b) {
        const auto ib = order[b];
        if (!(boxes[ib][j].lo < boxes[ia][j].hi)) break;
        neighbours[j][ia].push_back(ib);
        neighbours[j][ib].push_back(ia);
      }
    }
    for (auto& list : neighbours[j]) std::sort(list.begin(), list.end());
  }

  // links[r]: (earlier role, row) pairs that must overlap with role r.
  std::vector<std::vector<std::pair<int, int>>> links(roles);
  for (int r = 1; r < roles; ++r) {
    for (int q = 0; q < r; ++q) {
      for (int j = 0; j < table.rows(); ++j) {
        if (table.at(q, j) == table.at(r, j)) links[r].emplace_back(q, j);
      }
    }
  }

  auto worker = [&](std::size_t first, std::size_t stride) {
    Rational partial = 0;
    std::vector<std::uint32_t> chosen(roles);
    std::vector<const Box*> tuple(roles);
    auto recurse = [&](auto&& self, int r) -> void {
      if (r == roles) {
        for (int k = 0; k < roles; ++k) tuple[k] = &boxes[chosen[k]];
        partial += TupleMass(prep, tuple);
        return;
      }
      if (links[r].empty()) {
        for (std::uint32_t i = 0; i < count; ++i) {
          chosen[r] = i;
          self(self, r + 1);
        }
        return;
      }
      // Smallest constraint list drives the loop; the others filter.
      const std::vector<std::uint32_t>* driver = nullptr;
      for (const auto& [q, j] : links[r]) {
        const auto& list = neighbours[j][chosen[q]];
        if (!driver || list.size() < driver->size()) driver = &list;
      }
      for (const std::uint32_t i : *driver) {
        bool ok = true;
        for (const auto& [q, j] : links[r]) {
          const auto& list = neighbours[j][chosen[q]];
          if (&list == driver) continue;
          if (!std::binary_search(list.begin(), list.end(), i)) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        chosen[r] = i;
        self(self, r + 1);
      }
    };
    for (std::size_t i = first; i < count; i += stride) {
      chosen[0] = static_cast<std::uint32_t>(i);
      recurse(recurse, 1);
    }
    return partial;
  };

  const auto workers =
      static_cast<std::size_t>(std::clamp<int>(jobs, 1, static_cast<int>(count)));
  if (workers == 1) return worker(0, 1);
  std::vector<Rational> partials(workers);
  std::vector<std::thread> threads;
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] { partials[w] = worker(w, workers); });
  }
  for (auto& t : threads) t.join();
  Rational total = 0;
  for (const auto& p : partials) total += p;
  return total;
}

Rational Evaluate(const BoxUnion& boxes, const PreparedTable& prep, int jobs) {
  if (boxes.dim() != prep.table.rows()) {
    throw Error(Errc::kDimension, "shift table rows must match box dimension");
  }
  Rational total = SumOverTuples(boxes, prep, jobs);
  if (prep.free_roles > 0 && total != 0) {
    const Rational mu = boxes.measure();
    for (int k = 0; k < prep.free_roles; ++k) total *= mu;
  }
  return total;
}

}  // namespace

Rational ArcIntersectionLength(std::span<const RowConstraint> row,
                               const Rational& c) {
  std::vector<Piece> current{{Rational(0), Rational(1)}};
  for (const auto& rc : row) {
    const Rational start =
        FracPart(rc.target.lo - Rational(static_cast<long>(rc.coeff)) * c);
    current = Intersect(current, Unwrap(start, rc.target.length()));
    if (current.empty()) return Rational(0);
  }
  Rational total = 0;
  for (const auto& [lo, hi] : current) total += hi - lo;
  return total;
}

PiecewisePolynomial OverlapProfile(std::span<const RowConstraint> row) {
  RowParam(row);
  std::vector<Rational> cuts{Rational(0), Rational(1)};
  // The intersection length is linear in c except where an endpoint of one
  // moving arc passes an endpoint of another arc moving at a different rate.
  for (std::size_t a = 0; a < row.size(); ++a) {
    for (std::size_t b = a + 1; b < row.size(); ++b) {
      std::int64_t delta = row[b].coeff - row[a].coeff;
      if (delta == 0) continue;
      for (const Rational* ea : {&row[a].target.lo, &row[a].target.hi}) {
        for (const Rational* eb : {&row[b].target.lo, &row[b].target.hi}) {
          Rational rhs = *eb - *ea;
          std::int64_t span = delta;
          if (span < 0) {
            span = -span;
            rhs = -rhs;
          }
          // c = (rhs + m) / span with 0 <= rhs + m < span.
          Rational value = FracPart(rhs);
          for (; value < span; value += 1) {
            cuts.push_back(value / static_cast<long>(span));
          }
        }
      }
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<Rational> values;
  values.reserve(cuts.size());
  for (const auto& c : cuts) values.push_back(ArcIntersectionLength(row, c));
  std::vector<Polynomial> pieces;
  pieces.reserve(cuts.size() - 1);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (values[i] == values[i + 1]) {
      pieces.push_back(Polynomial::Constant(values[i]));
    } else {
      pieces.push_back(
          Polynomial::Linear(cuts[i], values[i], cuts[i + 1], values[i + 1]));
    }
  }
  return PiecewisePolynomial(std::move(cuts), std::move(pieces));
}

Rational TripleIntersectionMeasureFactorized(const BoxUnion& boxes,
                                             const ShiftConstraintTable& table,
                                             int jobs) {
  PreparedTable prep = Prepare(table);
  for (const auto& rows : prep.rows_of_param) {
    if (rows.size() > 1) {
      throw Error(Errc::kStructure,
                  "pattern not factorizable: a shift parameter spans rows");
    }
  }
  return Evaluate(boxes, prep, jobs);
}

Rational TripleIntersectionMeasureSharedShift(const BoxUnion& boxes,
                                              const ShiftConstraintTable& table,
                                              int jobs) {
  PreparedTable prep = Prepare(table);
  const auto used = std::count_if(prep.rows_of_param.begin(),
                                  prep.rows_of_param.end(),
                                  [](const auto& rows) { return !rows.empty(); });
  if (used > 1) {
    throw Error(Errc::kStructure,
                "shared-shift engine needs a single shift parameter");
  }
  return Evaluate(boxes, prep, jobs);
}

Rational IntersectionMeasure(const BoxUnion& boxes,
                             const ShiftConstraintTable& table, int jobs) {
  return Evaluate(boxes, Prepare(table), jobs);
}

}  // namespace nilrec::torus
