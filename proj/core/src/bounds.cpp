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

#include "nilrec/bounds.hpp"

#include "nilrec/error.hpp"

namespace nilrec::experiments {

const char* ThresholdVariantName(ThresholdVariant v) {
  switch (v) {
    case ThresholdVariant::kCommuting2:
      return "commuting2";
    case ThresholdVariant::kNilpotent2:
      return "nilpotent2";
    case ThresholdVariant::kAp3Strip:
      return "ap3strip";
  }
  return "?";
}

ThresholdVariant ParseThresholdVariant(const std::string& text) {
  if (text == "commuting2") return ThresholdVariant::kCommuting2;
  if (text == "nilpotent2") return ThresholdVariant::kNilpotent2;
  if (text == "ap3strip") return ThresholdVariant::kAp3Strip;
  throw Error(Errc::kParse, "unknown threshold variant '" + text + "'");
}

const char* BoundKindName(BoundKind k) { return k == BoundKind::kNu ? "nu" : "w"; }

BoundKind ParseBoundKind(const std::string& text) {
  if (text == "nu") return BoundKind::kNu;
  if (text == "w") return BoundKind::kW;
  throw Error(Errc::kParse, "unknown bound kind '" + text + "'");
}

const char* VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kInconclusive:
      return "inconclusive";
  }
  return "?";
}

ExponentThreshold ComputeExponentThreshold(ThresholdVariant variant,
                                           const BigInt& n,
                                           const BigInt& set_size, int digits) {
  if (n < 2) throw Error(Errc::kDomain, "threshold needs N >= 2");
  if (set_size < 1) throw Error(Errc::kDomain, "threshold needs set_size >= 1");
  const BigInt limit = variant == ThresholdVariant::kAp3Strip ? n : BigInt(n * n);
  if (set_size > limit) {
    throw Error(Errc::kDomain, "set_size exceeds the ambient grid");
  }
  long p = 1;
  long q = 1;
  long c = 2;
  switch (variant) {
    case ThresholdVariant::kCommuting2:
      p = 3;
      q = 3;
      c = 8;
      break;
    case ThresholdVariant::kNilpotent2:
      q = 2;
      c = 4;
      break;
    case ThresholdVariant::kAp3Strip:
      break;
  }
  const HpInterval log_n = HpInterval::Log(HpInterval(Rational(n), digits));
  const HpInterval log_c = HpInterval::Log(HpInterval(Rational(c), digits));
  const HpInterval log_s = HpInterval::Log(HpInterval(Rational(set_size), digits));
  const HpInterval denom = HpInterval(Rational(q), digits) + log_c / log_n - log_s / log_n;
  const HpInterval ell = HpInterval(Rational(1), digits) + HpInterval(Rational(p), digits) / denom;
  return {variant, n, set_size, ell};
}

LowerBoundEstimate ComputeLowerBound(BoundKind kind, const BigInt& n,
                                     const Rational& epsilon, int digits) {
  if (n < 16) throw Error(Errc::kDomain, "lower bound needs N >= 16");
  if (epsilon <= 0) throw Error(Errc::kDomain, "epsilon must be positive");
  const Rational e = kind == BoundKind::kW ? Rational(2 * epsilon) : epsilon;
  const HpInterval log_n = HpInterval::Log(HpInterval(Rational(n), digits));
  const HpInterval num =
      HpInterval(Rational(4), digits) * HpInterval::Log(HpInterval(Rational(2), digits)) +
      HpInterval(e, digits);
  const HpInterval exponent = HpInterval(Rational(2), digits) - num / HpInterval::Log(log_n);
  const HpInterval value = HpInterval::Exp(exponent * log_n);
  return {kind, n, epsilon, exponent, value};
}

Verdict CheckBelowPower(const Rational& measure, const Rational& base,
                        const HpInterval& ell, int digits) {
  if (base <= 0) throw Error(Errc::kDomain, "power base must be positive");
  if (measure < 0) throw Error(Errc::kDomain, "measure must be non-negative");
  if (measure == 0) return Verdict::kPass;
  const HpInterval lhs = HpInterval::Log(HpInterval(measure, digits));
  const HpInterval rhs = ell * HpInterval::Log(HpInterval(base, digits));
  if (lhs.StrictlyBelow(rhs)) return Verdict::kPass;
  if (!lhs.StrictlyBelow(rhs) && !rhs.StrictlyBelow(lhs)) return Verdict::kInconclusive;
  return Verdict::kFail;
}

}  // namespace nilrec::experiments
