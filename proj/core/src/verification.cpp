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

#include "nilrec/verification.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace nilrec::verification {
namespace {

void RequireDim(const LatticePointSet& set, int dim, const char* what) {
  if (set.dim() != dim) {
    throw Error(Errc::kDimension, std::string(what) + " needs a set of dim " +
                                      std::to_string(dim) + ", got " +
                                      std::to_string(set.dim()));
  }
}

}  // namespace

const char* WitnessKindName(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::kCorner: return "corner";
    case WitnessKind::kThreePoint: return "three-point";
    case WitnessKind::kAp3: return "ap3";
    case WitnessKind::kMatrixRow: return "matrix-row";
    case WitnessKind::kMatrixPair: return "matrix-pair";
  }
  return "unknown";
}

VerifyResult VerifyCornerFree(const LatticePointSet& set) {
  RequireDim(set, 2, "verify_corner_free");
  std::map<std::int64_t, std::vector<std::int64_t>> rows;
  for (const auto& p : set.points()) rows[p[1]].push_back(p[0]);

  for (const auto& p : set.points()) {
    const std::int64_t x = p[0];
    const std::int64_t y = p[1];
    for (const std::int64_t x2 : rows[y]) {
      if (x2 == x) continue;
      const std::int64_t delta = x2 - x;
      const Point corner{x, y + delta, 0};
      if (set.Contains(corner)) {
        return PatternWitness{WitnessKind::kCorner,
                              {{x, y, 0}, {x2, y, 0}, corner}};
      }
    }
  }
  return std::nullopt;
}

VerifyResult VerifyThreePointFree(const LatticePointSet& set) {
  RequireDim(set, 3, "verify_three_point_free");
  // Pattern (x, y, z'), (x, y', z), (x', y, z): the last two share z, and the
  // first lies on the Z-line through (x, y).
  std::map<std::int64_t, std::vector<std::pair<std::int64_t, std::int64_t>>>
      by_z;
  std::map<std::pair<std::int64_t, std::int64_t>, std::vector<std::int64_t>>
      z_lines;
  for (const auto& p : set.points()) {
    by_z[p[2]].emplace_back(p[0], p[1]);
    z_lines[{p[0], p[1]}].push_back(p[2]);
  }
  for (const auto& [z, cells] : by_z) {
    for (const auto& [x, y2] : cells) {
      for (const auto& [x2, y] : cells) {
        auto line = z_lines.find({x, y});
        if (line == z_lines.end()) continue;
        for (const std::int64_t z2 : line->second) {
          if (x == x2 && y == y2 && z == z2) continue;
          return PatternWitness{WitnessKind::kThreePoint,
                                {{x, y, z2}, {x, y2, z}, {x2, y, z}}};
        }
      }
    }
  }
  return std::nullopt;
}

VerifyResult VerifyAp3Free(const LatticePointSet& set) {
  RequireDim(set, 1, "verify_ap3_free");
  const auto pts = set.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t k = i + 1; k < pts.size(); ++k) {
      const std::int64_t sum = pts[i][0] + pts[k][0];
      if (sum % 2 != 0) continue;
      const Point mid{sum / 2, 0, 0};
      if (set.Contains(mid)) {
        return PatternWitness{WitnessKind::kAp3, {pts[i], mid, pts[k]}};
      }
    }
  }
  return std::nullopt;
}

VerifyResult VerifyMatrixProperties(const IntMatrix& m) {
  if (!m.square()) throw Error(Errc::kShape, "matrix must be square");
  const auto n = static_cast<std::int64_t>(m.rows());
  std::map<std::int64_t, std::vector<std::pair<std::size_t, std::size_t>>>
      cells_by_value;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const std::int64_t a = m(i, j);
      if (a < 0 || a > n) {
        throw Error(Errc::kShape, "matrix entry outside [0, N]");
      }
      if (a != 0) cells_by_value[a].emplace_back(i, j);
    }
  }
  auto cell = [&](std::size_t i, std::size_t j) {
    return Point{static_cast<std::int64_t>(i), static_cast<std::int64_t>(j),
                 m(i, j)};
  };

  // Condition (1): a value appears at most once per row and per column.
  for (const auto& [k, cells] : cells_by_value) {
    for (std::size_t a = 0; a < cells.size(); ++a) {
      for (std::size_t b = a + 1; b < cells.size(); ++b) {
        const auto [i, j] = cells[a];
        const auto [i2, j2] = cells[b];
        if (i == i2 || j == j2) {
          return PatternWitness{WitnessKind::kMatrixRow,
                                {cell(i, j), cell(i2, j2)}};
        }
      }
    }
  }
  // Condition (2): two cells holding k force both cross cells to be empty.
  for (const auto& [k, cells] : cells_by_value) {
    for (std::size_t a = 0; a < cells.size(); ++a) {
      for (std::size_t b = a + 1; b < cells.size(); ++b) {
        const auto [i, j] = cells[a];
        const auto [i2, j2] = cells[b];
        for (const auto& [r, c] : {std::pair{i, j2}, std::pair{i2, j}}) {
          if (m(r, c) != 0) {
            return PatternWitness{WitnessKind::kMatrixPair,
                                  {cell(i, j), cell(i2, j2), cell(r, c)}};
          }
        }
      }
    }
  }
  return std::nullopt;
}

VerifyResult Verify(const LatticePointSet& set, Certificate c) {
  switch (c) {
    case Certificate::kNone: return std::nullopt;
    case Certificate::kCornerFree: return VerifyCornerFree(set);
    case Certificate::kThreePointFree: return VerifyThreePointFree(set);
    case Certificate::kAp3Free: return VerifyAp3Free(set);
  }
  return std::nullopt;
}

bool WitnessIsViolation(const PatternWitness& w) {
  const auto& p = w.points;
  switch (w.kind) {
    case WitnessKind::kCorner: {
      if (p.size() != 3) return false;
      const bool shape = p[1][1] == p[0][1] && p[2][0] == p[0][0] &&
                         p[1][0] - p[0][0] == p[2][1] - p[0][1];
      return shape && p[1][0] != p[0][0];
    }
    case WitnessKind::kThreePoint: {
      if (p.size() != 3) return false;
      // p[0] = (x, y, z'), p[1] = (x, y', z), p[2] = (x', y, z).
      const bool shape =
          p[0][0] == p[1][0] && p[0][1] == p[2][1] && p[1][2] == p[2][2];
      const bool forced =
          p[2][0] == p[0][0] && p[1][1] == p[0][1] && p[0][2] == p[1][2];
      return shape && !forced;
    }
    case WitnessKind::kAp3: {
      if (p.size() != 3) return false;
      return p[0][0] + p[2][0] == 2 * p[1][0] && p[0][0] != p[2][0];
    }
    case WitnessKind::kMatrixRow: {
      if (p.size() != 2) return false;
      const bool distinct = p[0][0] != p[1][0] || p[0][1] != p[1][1];
      const bool aligned = p[0][0] == p[1][0] || p[0][1] == p[1][1];
      return p[0][2] != 0 && p[0][2] == p[1][2] && distinct && aligned;
    }
    case WitnessKind::kMatrixPair: {
      if (p.size() != 3) return false;
      const bool distinct = p[0][0] != p[1][0] || p[0][1] != p[1][1];
      const bool cross = (p[2][0] == p[0][0] && p[2][1] == p[1][1]) ||
                         (p[2][0] == p[1][0] && p[2][1] == p[0][1]);
      return p[0][2] != 0 && p[0][2] == p[1][2] && distinct && cross &&
             p[2][2] != 0;
    }
  }
  return false;
}

LatticePointSet Certify(LatticePointSet set, Certificate c) {
  if (auto witness = Verify(set, c)) {
    throw CertificationError(std::string("set is not ") + CertificateName(c) +
                                 ": oracle found a " +
                                 WitnessKindName(witness->kind) + " pattern",
                             std::move(*witness));
  }
  set.set_certificate(c);
  return set;
}

}  // namespace nilrec::verification
