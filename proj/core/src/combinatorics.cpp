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

#include "nilrec/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "nilrec/error.hpp"
#include "nilrec/verification.hpp"

namespace nilrec::combinatorics {
namespace {

BigInt Power(int base, int exponent) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(exponent));
  return out;
}

std::int64_t ToInt64(const BigInt& v, const char* what) {
  if (!v.fits_slong_p()) {
    throw Error(Errc::kSizeCap, std::string(what) + " does not fit in 64 bits");
  }
  return v.get_si();
}

}  // namespace

DigitProfile::DigitProfile(int d, int multiplicity) : d_(d), m_(multiplicity) {
  if (d_ < 2) throw Error(Errc::kDomain, "digit profile needs d >= 2");
  if (m_ < 1) throw Error(Errc::kDomain, "digit profile needs m >= 1");
}

BigInt DigitProfile::side() const { return Power(base(), digits()); }

int Omega(int d) {
  const double l = std::log(static_cast<double>(d));
  return std::max(1, static_cast<int>(std::floor(l * l)));
}

ParameterChoice ChooseParameters(std::uint64_t n) {
  if (n < 3) throw Error(Errc::kDomain, "choose_parameters needs N >= 3");
  const BigInt target(std::to_string(n));
  std::optional<DigitProfile> best;
  for (int d = 2;; ++d) {
    DigitProfile candidate(d, Omega(d));
    if (candidate.side() > target) break;
    best = candidate;
  }
  if (!best) return {DigitProfile(2, 1), true};
  return {*best, false};
}

BigInt CornerFreeCardinality(const DigitProfile& p) {
  BigInt denom = 1;
  const BigInt mfact = Factorial(static_cast<unsigned long>(p.multiplicity()));
  for (int i = 0; i < p.d() * p.d(); ++i) denom *= mfact;
  return Factorial(static_cast<unsigned long>(p.digits())) / denom;
}

bool CornerFreeContains(const DigitProfile& p, std::uint64_t x,
                        std::uint64_t y) {
  const BigInt side = p.side();
  if (BigInt(std::to_string(x)) >= side || BigInt(std::to_string(y)) >= side) {
    throw Error(Errc::kRange, "coordinate outside [0, (2d-1)^n)");
  }
  const auto base = static_cast<std::uint64_t>(p.base());
  const auto d = static_cast<std::uint64_t>(p.d());
  std::vector<int> counts(d * d, 0);
  for (int k = 0; k < p.digits(); ++k) {
    const std::uint64_t xi = x % base;
    const std::uint64_t yi = y % base;
    x /= base;
    y /= base;
    if (xi >= d || yi >= d) return false;
    if (++counts[xi * d + yi] > p.multiplicity()) return false;
  }
  return std::all_of(counts.begin(), counts.end(),
                     [&](int c) { return c == p.multiplicity(); });
}

LatticePointSet CornerFreeEnumerate(const DigitProfile& p, std::uint64_t cap) {
  const BigInt count = CornerFreeCardinality(p);
  if (count > BigInt(std::to_string(cap))) {
    throw Error(Errc::kSizeCap, "corner-free set has " + count.get_str() +
                                    " points, above the enumeration cap " +
                                    std::to_string(cap));
  }
  const std::int64_t side = ToInt64(p.side(), "side length");
  std::vector<std::int64_t> powers(p.digits());
  std::int64_t pw = 1;
  for (int k = 0; k < p.digits(); ++k) {
    powers[k] = pw;
    if (k + 1 < p.digits()) pw *= p.base();
  }

  // Each position carries one symbol i * d + j standing for the digit pair
  // (i, j); Lambda is the set of distinct arrangements of the multiset.
  std::vector<int> symbols;
  symbols.reserve(p.digits());
  for (int s = 0; s < p.d() * p.d(); ++s) {
    symbols.insert(symbols.end(), p.multiplicity(), s);
  }
  std::vector<Point> points;
  points.reserve(count.get_ui());
  do {
    std::int64_t x = 0;
    std::int64_t y = 0;
    for (int k = 0; k < p.digits(); ++k) {
      x += (symbols[k] / p.d()) * powers[k];
      y += (symbols[k] % p.d()) * powers[k];
    }
    points.push_back({x, y, 0});
  } while (std::next_permutation(symbols.begin(), symbols.end()));

  return verification::Certify(LatticePointSet(2, side, std::move(points)),
                               Certificate::kCornerFree);
}

SliceResult ThreePointFreeFromCornerFree(const LatticePointSet& lambda) {
  if (lambda.dim() != 2) {
    throw Error(Errc::kDimension, "slicing needs a planar set");
  }
  if (lambda.certificate() != Certificate::kCornerFree) {
    throw Error(Errc::kCertification,
                "slicing needs a set certified corner-free");
  }
  const std::int64_t n = lambda.side();
  // Each (x, y) contributes one point to every V_s with s in
  // [x + y, x + y + n - 1]; accumulate with a difference array.
  std::vector<std::int64_t> diff(3 * n - 1, 0);
  for (const auto& p : lambda.points()) {
    diff[p[0] + p[1]] += 1;
    diff[p[0] + p[1] + n] -= 1;
  }
  SliceSelection selection;
  selection.slice_sizes.resize(3 * n - 2);
  std::int64_t running = 0;
  for (std::int64_t s = 0; s < 3 * n - 2; ++s) {
    running += diff[s];
    selection.slice_sizes[s] = static_cast<std::uint64_t>(running);
  }
  selection.s = std::max_element(selection.slice_sizes.begin(),
                                 selection.slice_sizes.end()) -
                selection.slice_sizes.begin();

  std::vector<Point> points;
  for (const auto& p : lambda.points()) {
    const std::int64_t z = selection.s - p[0] - p[1];
    if (z >= 0 && z < n) points.push_back({p[0], p[1], z});
  }
  return {verification::Certify(LatticePointSet(3, n, std::move(points)),
                                Certificate::kThreePointFree),
          std::move(selection)};
}

BehrendConstruction BehrendConstructDetailed(std::uint64_t n,
                                             std::uint64_t cap) {
  if (n < 1) throw Error(Errc::kDomain, "behrend construction needs N >= 1");
  if (n > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    throw Error(Errc::kRange, "N does not fit in 64 bits");
  }
  constexpr int kMaxD = 64;

  struct Candidate {
    int d = 2;
    int digits = 0;
    bool full_cube = false;
    std::int64_t radius_sq = 0;
    std::uint64_t size = 1;
  };
  Candidate best;  // the singleton {0}

  for (int d = 2; d <= kMaxD && static_cast<std::uint64_t>(2 * d - 1) <= n;
       ++d) {
    const auto base = static_cast<std::uint64_t>(2 * d - 1);
    int digits = 0;
    for (std::uint64_t pw = 1; pw <= n / base; pw *= base) ++digits;
    // Shell populations: number of digit vectors with sum of squares r.
    const std::int64_t max_r =
        static_cast<std::int64_t>(digits) * (d - 1) * (d - 1);
    std::vector<std::uint64_t> counts(max_r + 1, 0);
    counts[0] = 1;
    for (int k = 0; k < digits; ++k) {
      std::vector<std::uint64_t> next(max_r + 1, 0);
      for (std::int64_t r = 0; r <= max_r; ++r) {
        if (counts[r] == 0) continue;
        for (int digit = 0; digit < d; ++digit) {
          const std::int64_t r2 = r + digit * digit;
          if (r2 <= max_r) next[r2] += counts[r];
        }
      }
      counts.swap(next);
    }
    if (d == 2 && (1ULL << digits) > best.size) {
      best = {d, digits, true, 0, 1ULL << digits};
    }
    for (std::int64_t r = 0; r <= max_r; ++r) {
      if (counts[r] > best.size) best = {d, digits, false, r, counts[r]};
    }
  }
  if (best.size > cap) {
    throw Error(Errc::kSizeCap, "AP3-free set has " +
                                    std::to_string(best.size) +
                                    " points, above the enumeration cap " +
                                    std::to_string(cap));
  }

  std::vector<Point> points;
  points.reserve(best.size);
  const std::int64_t base = 2 * best.d - 1;
  // Depth-first over digit positions, pruning on the remaining square sum.
  auto emit = [&](auto&& self, int pos, std::int64_t value, std::int64_t pw,
                  std::int64_t remaining) -> void {
    if (pos == best.digits) {
      if (best.full_cube || remaining == 0) points.push_back({value, 0, 0});
      return;
    }
    const std::int64_t slots = best.digits - pos - 1;
    for (int digit = 0; digit < best.d; ++digit) {
      const std::int64_t left = remaining - digit * digit;
      if (!best.full_cube &&
          (left < 0 || left > slots * (best.d - 1) * (best.d - 1))) {
        continue;
      }
      self(self, pos + 1, value + digit * pw, pw * base, left);
    }
  };
  emit(emit, 0, 0, 1, best.radius_sq);

  auto set = verification::Certify(
      LatticePointSet(1, static_cast<std::int64_t>(n), std::move(points)),
      Certificate::kAp3Free);
  return {std::move(set), best.d, best.digits, best.full_cube, best.radius_sq};
}

LatticePointSet BehrendAp3Construct(std::uint64_t n, std::uint64_t cap) {
  return BehrendConstructDetailed(n, cap).set;
}

IntMatrix ThreePointFreeToMatrix(const LatticePointSet& v) {
  if (v.dim() != 3) {
    throw Error(Errc::kDimension, "matrix encoding needs a set in [N]^3");
  }
  const auto n = static_cast<std::size_t>(v.side());
  IntMatrix m(n, n);
  for (const auto& p : v.points()) {
    auto& cell = m(static_cast<std::size_t>(p[0]), static_cast<std::size_t>(p[1]));
    if (cell != 0) {
      throw Error(Errc::kStructure,
                  "two points on the Z-line through (" + std::to_string(p[0]) +
                      ", " + std::to_string(p[1]) + ")");
    }
    cell = p[2] + 1;
  }
  return m;
}

LatticePointSet MatrixToThreePointFree(const IntMatrix& m) {
  if (!m.square() || m.rows() == 0) {
    throw Error(Errc::kShape, "matrix must be square and non-empty");
  }
  const auto n = static_cast<std::int64_t>(m.rows());
  std::vector<Point> points;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const std::int64_t a = m(i, j);
      if (a < 0 || a > n) {
        throw Error(Errc::kShape, "matrix entry outside [0, N]");
      }
      if (a != 0) {
        points.push_back({static_cast<std::int64_t>(i),
                          static_cast<std::int64_t>(j), a - 1});
      }
    }
  }
  return LatticePointSet(3, n, std::move(points));
}

}  // namespace nilrec::combinatorics
