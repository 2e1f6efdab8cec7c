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

#include "nilrec/point_set.hpp"

#include <algorithm>

#include "nilrec/error.hpp"

namespace nilrec {

const char* CertificateName(Certificate c) {
  switch (c) {
    case Certificate::kNone: return "none";
    case Certificate::kCornerFree: return "corner-free";
    case Certificate::kThreePointFree: return "three-point-free";
    case Certificate::kAp3Free: return "ap3-free";
  }
  return "none";
}

std::optional<Certificate> ParseCertificate(const std::string& name) {
  for (auto c : {Certificate::kNone, Certificate::kCornerFree,
                 Certificate::kThreePointFree, Certificate::kAp3Free}) {
    if (name == CertificateName(c)) return c;
  }
  return std::nullopt;
}

LatticePointSet::LatticePointSet(int dim, std::int64_t side,
                                 std::vector<Point> points,
                                 Certificate certificate)
    : dim_(dim), side_(side), points_(std::move(points)),
      certificate_(certificate) {
  if (dim_ < 1 || dim_ > 3) {
    throw Error(Errc::kDimension, "point sets have dimension 1, 2 or 3");
  }
  if (side_ < 1) {
    throw Error(Errc::kRange, "side length must be positive");
  }
  for (const auto& p : points_) {
    for (int k = 0; k < 3; ++k) {
      const bool active = k < dim_;
      if (active && (p[k] < 0 || p[k] >= side_)) {
        throw Error(Errc::kRange, "coordinate " + std::to_string(p[k]) +
                                      " outside [0, " + std::to_string(side_) +
                                      ")");
      }
      if (!active && p[k] != 0) {
        throw Error(Errc::kDimension, "point has more coordinates than dim");
      }
    }
  }
  std::sort(points_.begin(), points_.end());
  if (std::adjacent_find(points_.begin(), points_.end()) != points_.end()) {
    throw Error(Errc::kRange, "duplicate point in set");
  }
}

bool LatticePointSet::Contains(const Point& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

}  // namespace nilrec
