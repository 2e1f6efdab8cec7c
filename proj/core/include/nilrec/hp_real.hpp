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

#ifndef NILREC_HP_REAL_HPP_
#define NILREC_HP_REAL_HPP_

#include <string>

#include <mpfr.h>

#include "nilrec/numeric.hpp"

namespace nilrec::experiments {

inline constexpr int kDefaultPrecisionDigits = 50;
inline constexpr int kCheckPrecisionDigits = 100;

// Closed interval [lo, hi] of MPFR reals with outward rounding. Every
// operation returns an enclosure of the exact result.
class HpInterval {
 public:
  explicit HpInterval(int digits = kDefaultPrecisionDigits);
  HpInterval(const Rational& q, int digits);
  HpInterval(const HpInterval& other);
  HpInterval& operator=(const HpInterval& other);
  ~HpInterval();

  static HpInterval Log(const HpInterval& x);
  static HpInterval Exp(const HpInterval& x);

  friend HpInterval operator+(const HpInterval& a, const HpInterval& b);
  friend HpInterval operator-(const HpInterval& a, const HpInterval& b);
  friend HpInterval operator*(const HpInterval& a, const HpInterval& b);
  friend HpInterval operator/(const HpInterval& a, const HpInterval& b);

  int digits() const { return digits_; }
  bool StrictlyBelow(const HpInterval& other) const;
  bool StrictlyAbove(const HpInterval& other) const;
  bool Positive() const;

  double lower() const;
  double upper() const;
  double mid() const;
  // Midpoint rendered with `digits` significant decimal digits.
  std::string ToString(int digits) const;
  std::string ToString() const { return ToString(digits_); }

 private:
  int digits_;
  mpfr_t lo_;
  mpfr_t hi_;
};

// Reads a precision override from NILREC_PRECISION, else `fallback`.
int PrecisionFromEnv(int fallback);

}  // namespace nilrec::experiments

#endif  // NILREC_HP_REAL_HPP_
