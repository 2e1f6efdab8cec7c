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

#ifndef NILREC_POINT_SET_HPP_
#define NILREC_POINT_SET_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nilrec {

// Coordinates beyond the set's dimension are kept at zero so that plain
// lexicographic comparison of Points orders sets of any dimension.
using Point = std::array<std::int64_t, 3>;

enum class Certificate { kNone, kCornerFree, kThreePointFree, kAp3Free };

const char* CertificateName(Certificate c);
std::optional<Certificate> ParseCertificate(const std::string& name);

// A finite subset of [0, side)^dim, dim in {1, 2, 3}, stored sorted and
// duplicate free. The certificate records which forbidden-pattern oracle has
// accepted the set (or, for sets read from disk, which one is claimed).
class LatticePointSet {
 public:
  LatticePointSet(int dim, std::int64_t side, std::vector<Point> points,
                  Certificate certificate = Certificate::kNone);

  int dim() const { return dim_; }
  std::int64_t side() const { return side_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  std::span<const Point> points() const { return points_; }
  const Point& operator[](std::size_t i) const { return points_[i]; }

  Certificate certificate() const { return certificate_; }
  void set_certificate(Certificate c) { certificate_ = c; }

  bool Contains(const Point& p) const;

  friend bool operator==(const LatticePointSet& a, const LatticePointSet& b) {
    return a.dim_ == b.dim_ && a.side_ == b.side_ && a.points_ == b.points_;
  }

 private:
  int dim_;
  std::int64_t side_;
  std::vector<Point> points_;
  Certificate certificate_;
};

}  // namespace nilrec

#endif  // NILREC_POINT_SET_HPP_
