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

#ifndef NILREC_AFFINE_MAP_HPP_
#define NILREC_AFFINE_MAP_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nilrec/int_matrix.hpp"
#include "nilrec/sym_scalar.hpp"

namespace nilrec::dynamics {

using SymVector = std::vector<SymScalar>;

// x -> A x + t on T^k, A unipotent.
class AffineTorusMap {
 public:
  // Throws kDimension on shape mismatch, kDomain if A is not unipotent.
  AffineTorusMap(IntMatrix a, SymVector t);

  static AffineTorusMap Identity(std::size_t dim);

  std::size_t dim() const { return t_.size(); }
  const IntMatrix& matrix() const { return a_; }
  const SymVector& translation() const { return t_; }

  bool IsIdentity() const;
  bool IsTranslation() const;

  // Floating-point image of x, reduced to [0, 1).
  void ApplyApprox(std::span<const double> x, std::span<double> out,
                   double alpha, double beta) const;

  friend bool operator==(const AffineTorusMap&, const AffineTorusMap&) = default;

 private:
  IntMatrix a_;
  SymVector t_;
};

bool IsUnipotent(const IntMatrix& a);

SymVector MultiplyVector(const IntMatrix& a, const SymVector& v);

// g o h.
AffineTorusMap Compose(const AffineTorusMap& g, const AffineTorusMap& h);
AffineTorusMap Inverse(const AffineTorusMap& g);
AffineTorusMap Power(const AffineTorusMap& g, std::int64_t n);
// g h g^-1 h^-1, by composition.
AffineTorusMap Commutator(const AffineTorusMap& g, const AffineTorusMap& h);
// x -> x + (A_g - I) t_h + (A_h - I) t_g, the textbook shortcut. Kept only
// so tests can compare it with Commutator.
AffineTorusMap CommutatorShortcut(const AffineTorusMap& g,
                                  const AffineTorusMap& h);

struct CommuteReport {
  bool commute = false;
  // Set when the matrix parts commute, so that the translation criterion
  // (A_g - I) t_h == (A_h - I) t_g decides commutation.
  bool criterion_applicable = false;
  bool criterion = false;
};

// Throws kConsistency if the criterion and the direct check disagree.
CommuteReport CheckCommute(const AffineTorusMap& g, const AffineTorusMap& h);

// Least c such that all (c+1)-fold commutators of the generators and their
// inverses vanish; nullopt if that exceeds max_depth.
std::optional<int> NilpotencyClass(std::span<const AffineTorusMap> generators,
                                   int max_depth);

}  // namespace nilrec::dynamics

#endif  // NILREC_AFFINE_MAP_HPP_
