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

#include "nilrec/hp_real.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <vector>

#include "nilrec/error.hpp"

namespace nilrec::experiments {

namespace {

mpfr_prec_t BitsFor(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 16;
}

}  // namespace

HpInterval::HpInterval(int digits) : digits_(digits) {
  if (digits < 5 || digits > 10000) {
    throw Error(Errc::kDomain, "precision must be between 5 and 10000 digits");
  }
  mpfr_init2(lo_, BitsFor(digits));
  mpfr_init2(hi_, BitsFor(digits));
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

HpInterval::HpInterval(const Rational& q, int digits) : HpInterval(digits) {
  mpfr_set_q(lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, q.get_mpq_t(), MPFR_RNDU);
}

HpInterval::HpInterval(const HpInterval& other) : HpInterval(other.digits_) {
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

HpInterval& HpInterval::operator=(const HpInterval& other) {
  if (this != &other) {
    digits_ = other.digits_;
    mpfr_set_prec(lo_, BitsFor(digits_));
    mpfr_set_prec(hi_, BitsFor(digits_));
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  return *this;
}

HpInterval::~HpInterval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

HpInterval HpInterval::Log(const HpInterval& x) {
  if (!x.Positive()) throw Error(Errc::kDomain, "log of a non-positive value");
  HpInterval out(x.digits_);
  mpfr_log(out.lo_, x.lo_, MPFR_RNDD);
  mpfr_log(out.hi_, x.hi_, MPFR_RNDU);
  return out;
}

HpInterval HpInterval::Exp(const HpInterval& x) {
  HpInterval out(x.digits_);
  mpfr_exp(out.lo_, x.lo_, MPFR_RNDD);
  mpfr_exp(out.hi_, x.hi_, MPFR_RNDU);
  return out;
}

HpInterval operator+(const HpInterval& a, const HpInterval& b) {
  HpInterval out(std::max(a.digits_, b.digits_));
  mpfr_add(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return out;
}

HpInterval operator-(const HpInterval& a, const HpInterval& b) {
  HpInterval out(std::max(a.digits_, b.digits_));
  mpfr_sub(out.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(out.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return out;
}

HpInterval operator*(const HpInterval& a, const HpInterval& b) {
  HpInterval out(std::max(a.digits_, b.digits_));
  const mpfr_srcptr as[2] = {a.lo_, a.hi_};
  const mpfr_srcptr bs[2] = {b.lo_, b.hi_};
  mpfr_t t;
  mpfr_init2(t, BitsFor(out.digits_));
  mpfr_set_inf(out.lo_, 1);
  mpfr_set_inf(out.hi_, -1);
  for (auto x : as) {
    for (auto y : bs) {
      mpfr_mul(t, x, y, MPFR_RNDD);
      mpfr_min(out.lo_, out.lo_, t, MPFR_RNDD);
      mpfr_mul(t, x, y, MPFR_RNDU);
      mpfr_max(out.hi_, out.hi_, t, MPFR_RNDU);
    }
  }
  mpfr_clear(t);
  return out;
}

HpInterval operator/(const HpInterval& a, const HpInterval& b) {
  if (mpfr_sgn(b.lo_) <= 0 && mpfr_sgn(b.hi_) >= 0) {
    throw Error(Errc::kDomain, "division by an interval containing zero");
  }
  HpInterval out(std::max(a.digits_, b.digits_));
  const mpfr_srcptr as[2] = {a.lo_, a.hi_};
  const mpfr_srcptr bs[2] = {b.lo_, b.hi_};
  mpfr_t t;
  mpfr_init2(t, BitsFor(out.digits_));
  mpfr_set_inf(out.lo_, 1);
  mpfr_set_inf(out.hi_, -1);
  for (auto x : as) {
    for (auto y : bs) {
      mpfr_div(t, x, y, MPFR_RNDD);
      mpfr_min(out.lo_, out.lo_, t, MPFR_RNDD);
      mpfr_div(t, x, y, MPFR_RNDU);
      mpfr_max(out.hi_, out.hi_, t, MPFR_RNDU);
    }
  }
  mpfr_clear(t);
  return out;
}

bool HpInterval::StrictlyBelow(const HpInterval& other) const {
  return mpfr_less_p(hi_, other.lo_) != 0;
}

bool HpInterval::StrictlyAbove(const HpInterval& other) const {
  return other.StrictlyBelow(*this);
}

bool HpInterval::Positive() const { return mpfr_sgn(lo_) > 0; }

double HpInterval::lower() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double HpInterval::upper() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double HpInterval::mid() const {
  mpfr_t m;
  mpfr_init2(m, BitsFor(digits_));
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  const double d = mpfr_get_d(m, MPFR_RNDN);
  mpfr_clear(m);
  return d;
}

std::string HpInterval::ToString(int digits) const {
  mpfr_t m;
  mpfr_init2(m, BitsFor(digits_));
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  const int n = mpfr_snprintf(nullptr, 0, "%.*Rg", digits, m);
  std::vector<char> buf(static_cast<std::size_t>(n) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, m);
  mpfr_clear(m);
  return std::string(buf.data());
}

int PrecisionFromEnv(int fallback) {
  const char* env = std::getenv("NILREC_PRECISION");
  if (env == nullptr || *env == '\0') return fallback;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 5 || v > 10000) {
    throw Error(Errc::kParse, "NILREC_PRECISION must be an integer in [5, 10000]");
  }
  return static_cast<int>(v);
}

}  // namespace nilrec::experiments
