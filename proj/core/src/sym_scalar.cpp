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

#include "nilrec/sym_scalar.hpp"

#include <cmath>

namespace nilrec::dynamics {

SymScalar::SymScalar(Rational q0, Rational q1, Rational q2)
    : q0_(std::move(q0)), q1_(std::move(q1)), q2_(std::move(q2)) {
  Reduce();
}

void SymScalar::Reduce() { q0_ = FracPart(q0_); }

double SymScalar::Evaluate(double alpha, double beta) const {
  const double v = q0_.get_d() + q1_.get_d() * alpha + q2_.get_d() * beta;
  return v - std::floor(v);
}

std::string SymScalar::ToString() const {
  std::string out = ToFractionString(q0_);
  if (q1_ != 0) out += " + (" + ToFractionString(q1_) + ")a";
  if (q2_ != 0) out += " + (" + ToFractionString(q2_) + ")b";
  return out;
}

SymScalar& SymScalar::operator+=(const SymScalar& o) {
  q0_ += o.q0_;
  q1_ += o.q1_;
  q2_ += o.q2_;
  Reduce();
  return *this;
}

SymScalar& SymScalar::operator-=(const SymScalar& o) {
  q0_ -= o.q0_;
  q1_ -= o.q1_;
  q2_ -= o.q2_;
  Reduce();
  return *this;
}

SymScalar operator-(const SymScalar& a) {
  return SymScalar(-a.q0_, -a.q1_, -a.q2_);
}

SymScalar operator*(std::int64_t k, const SymScalar& a) {
  return BigInt(static_cast<long>(k)) * a;
}

SymScalar operator*(const BigInt& k, const SymScalar& a) {
  const Rational r(k);
  return SymScalar(r * a.q0_, r * a.q1_, r * a.q2_);
}

}  // namespace nilrec::dynamics
