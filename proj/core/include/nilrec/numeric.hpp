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

#ifndef NILREC_NUMERIC_HPP_
#define NILREC_NUMERIC_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace nilrec {

using Rational = mpq_class;
using BigInt = mpz_class;

// Always "p/q", including integers ("3/1"), so file formats stay uniform.
std::string ToFractionString(const Rational& q);
Rational ParseFraction(const std::string& text);

// Fractional part in [0, 1).
Rational FracPart(const Rational& q);
BigInt FloorOf(const Rational& q);

BigInt Factorial(unsigned long n);
BigInt Binomial2(std::int64_t n);

}  // namespace nilrec

#endif  // NILREC_NUMERIC_HPP_
