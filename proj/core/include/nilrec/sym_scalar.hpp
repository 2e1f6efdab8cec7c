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

#ifndef NILREC_SYM_SCALAR_HPP_
#define NILREC_SYM_SCALAR_HPP_

#include <cstdint>
#include <string>

#include "nilrec/numeric.hpp"

namespace nilrec::dynamics {

// q0 + q1*alpha + q2*beta, with q0 taken mod 1.
class SymScalar {
 public:
  SymScalar() = default;
  SymScalar(Rational q0, Rational q1 = 0, Rational q2 = 0);

  static SymScalar Alpha() { return SymScalar(0, 1, 0); }
  static SymScalar Beta() { return SymScalar(0, 0, 1); }

  const Rational& q0() const { return q0_; }
  const Rational& q1() const { return q1_; }
  const Rational& q2() const { return q2_; }

  bool IsZero() const { return q0_ == 0 && q1_ == 0 && q2_ == 0; }
  double Evaluate(double alpha, double beta) const;
  std::string ToString() const;

  SymScalar& operator+=(const SymScalar& o);
  SymScalar& operator-=(const SymScalar& o);
  friend SymScalar operator+(SymScalar a, const SymScalar& b) { return a += b; }
  friend SymScalar operator-(SymScalar a, const SymScalar& b) { return a -= b; }
  friend SymScalar operator-(const SymScalar& a);
  friend SymScalar operator*(std::int64_t k, const SymScalar& a);
  friend SymScalar operator*(const BigInt& k, const SymScalar& a);

  friend bool operator==(const SymScalar&, const SymScalar&) = default;

 private:
  void Reduce();
  Rational q0_;
  Rational q1_;
  Rational q2_;
};

}  // namespace nilrec::dynamics

#endif  // NILREC_SYM_SCALAR_HPP_
