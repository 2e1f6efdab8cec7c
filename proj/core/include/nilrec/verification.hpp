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

#ifndef NILREC_VERIFICATION_HPP_
#define NILREC_VERIFICATION_HPP_

#include <optional>
#include <string>
#include <vector>

#include "nilrec/error.hpp"
#include "nilrec/int_matrix.hpp"
#include "nilrec/point_set.hpp"

namespace nilrec::verification {

enum class WitnessKind { kCorner, kThreePoint, kAp3, kMatrixRow, kMatrixPair };

const char* WitnessKindName(WitnessKind kind);

// A concrete tuple violating a forbidden-pattern property.
//   kCorner:     (x, y), (x + delta, y), (x, y + delta)
//   kThreePoint: (x, y, z'), (x, y', z), (x', y, z)
//   kAp3:        a, a', a'' with a + a'' = 2 a'
//   kMatrixRow:  two cells (i, j, k) holding the same value k in one row or
//                column
//   kMatrixPair: cells (i, j, k), (i', j', k) and a nonzero cross cell
//                (i, j', v) or (i', j, v)
struct PatternWitness {
  WitnessKind kind;
  std::vector<Point> points;

  friend bool operator==(const PatternWitness&, const PatternWitness&) =
      default;
};

using VerifyResult = std::optional<PatternWitness>;

VerifyResult VerifyCornerFree(const LatticePointSet& set);
VerifyResult VerifyThreePointFree(const LatticePointSet& set);
VerifyResult VerifyAp3Free(const LatticePointSet& set);
VerifyResult VerifyMatrixProperties(const IntMatrix& m);

// Runs the oracle matching `c` (kNone always passes).
VerifyResult Verify(const LatticePointSet& set, Certificate c);

// Re-checks a witness against the defining condition alone, without any set.
bool WitnessIsViolation(const PatternWitness& w);

class CertificationError : public Error {
 public:
  CertificationError(const std::string& what, PatternWitness witness)
      : Error(Errc::kCertification, what), witness_(std::move(witness)) {}
  const PatternWitness& witness() const { return witness_; }

 private:
  PatternWitness witness_;
};

// Returns `set` stamped with `c` after the oracle accepts it; throws
// CertificationError carrying the witness otherwise.
LatticePointSet Certify(LatticePointSet set, Certificate c);

}  // namespace nilrec::verification

#endif  // NILREC_VERIFICATION_HPP_
