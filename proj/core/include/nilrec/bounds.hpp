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

#ifndef NILREC_BOUNDS_HPP_
#define NILREC_BOUNDS_HPP_

#include <string>

#include "nilrec/hp_real.hpp"
#include "nilrec/numeric.hpp"

namespace nilrec::experiments {

// commuting2: three-point-free boxes under two commuting maps.
// nilpotent2: corner-free boxes under the 2-step nilpotent pair.
// ap3strip:   strip set over an AP3-free set under the three commuting maps.
enum class ThresholdVariant { kCommuting2, kNilpotent2, kAp3Strip };

const char* ThresholdVariantName(ThresholdVariant v);
ThresholdVariant ParseThresholdVariant(const std::string& text);

struct ExponentThreshold {
  ThresholdVariant variant;
  BigInt n;
  BigInt set_size;
  HpInterval ell_star;
};

// l* = 1 + p / (q + log c / log N - log|S| / log N) with (p, q, c) equal to
// (3, 3, 8), (1, 2, 4) and (1, 1, 2) for the three variants.
// Throws kDomain for N < 2, set_size < 1, or set_size above N^2 (N for
// ap3strip).
ExponentThreshold ComputeExponentThreshold(ThresholdVariant variant,
                                           const BigInt& n,
                                           const BigInt& set_size,
                                           int digits = kDefaultPrecisionDigits);

enum class BoundKind { kNu, kW };

const char* BoundKindName(BoundKind k);
BoundKind ParseBoundKind(const std::string& text);

struct LowerBoundEstimate {
  BoundKind kind;
  BigInt n;
  Rational epsilon;
  HpInterval exponent;
  HpInterval value;
};

// N^(2 - (4 log 2 + e) / log log N), e = epsilon for nu and 2 epsilon for w.
// Throws kDomain for N < 16 or epsilon <= 0.
LowerBoundEstimate ComputeLowerBound(BoundKind kind, const BigInt& n,
                                     const Rational& epsilon,
                                     int digits = kDefaultPrecisionDigits);

enum class Verdict { kPass, kFail, kInconclusive };

const char* VerdictName(Verdict v);

// Decides measure < base^ell in log space with outward rounding; ties that
// the enclosure cannot separate are inconclusive.
Verdict CheckBelowPower(const Rational& measure, const Rational& base,
                        const HpInterval& ell,
                        int digits = kCheckPrecisionDigits);

}  // namespace nilrec::experiments

#endif  // NILREC_BOUNDS_HPP_
