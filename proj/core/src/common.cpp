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

#include "nilrec/error.hpp"
#include "nilrec/numeric.hpp"

namespace nilrec {

const char* ErrcName(Errc code) {
  switch (code) {
    case Errc::kRange: return "range";
    case Errc::kSizeCap: return "size";
    case Errc::kCertification: return "certification";
    case Errc::kStructure: return "structure";
    case Errc::kDimension: return "dimension";
    case Errc::kShape: return "shape";
    case Errc::kDomain: return "domain";
    case Errc::kParse: return "parse";
    case Errc::kConsistency: return "consistency";
  }
  return "unknown";
}

std::string ToFractionString(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational ParseFraction(const std::string& text) {
  Rational q;
  try {
    if (q.set_str(text, 10) != 0) {
      throw Error(Errc::kParse, "malformed fraction '" + text + "'");
    }
  } catch (const std::invalid_argument&) {
    throw Error(Errc::kParse, "malformed fraction '" + text + "'");
  }
  if (q.get_den() == 0) {
    throw Error(Errc::kParse, "zero denominator in '" + text + "'");
  }
  q.canonicalize();
  return q;
}

BigInt FloorOf(const Rational& q) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Rational FracPart(const Rational& q) { return q - Rational(FloorOf(q)); }

BigInt Factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt Binomial2(std::int64_t n) {
  BigInt b(static_cast<long>(n));
  return b * (b - 1) / 2;
}

}  // namespace nilrec
