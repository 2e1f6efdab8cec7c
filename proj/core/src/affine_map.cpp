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

#include "nilrec/affine_map.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nilrec/error.hpp"

namespace nilrec::dynamics {

namespace {

void RequireSameDim(const AffineTorusMap& g, const AffineTorusMap& h) {
  if (g.dim() != h.dim()) {
    throw Error(Errc::kDimension, "maps act on tori of different dimension");
  }
}

SymVector Add(SymVector a, const SymVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

}  // namespace

bool IsUnipotent(const IntMatrix& a) {
  if (!a.square()) return false;
  const IntMatrix n = a - IntMatrix::Identity(a.rows());
  IntMatrix p = IntMatrix::Identity(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) p = p * n;
  return p.IsZero();
}

SymVector MultiplyVector(const IntMatrix& a, const SymVector& v) {
  SymVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) != 0) out[i] += a(i, j) * v[j];
    }
  }
  return out;
}

AffineTorusMap::AffineTorusMap(IntMatrix a, SymVector t)
    : a_(std::move(a)), t_(std::move(t)) {
  if (!a_.square() || a_.rows() != t_.size() || t_.empty()) {
    throw Error(Errc::kDimension,
                "affine map needs a k x k matrix and k translations");
  }
  if (!IsUnipotent(a_)) {
    throw Error(Errc::kDomain, "matrix part is not unipotent");
  }
}

AffineTorusMap AffineTorusMap::Identity(std::size_t dim) {
  return AffineTorusMap(IntMatrix::Identity(dim), SymVector(dim));
}

bool AffineTorusMap::IsTranslation() const {
  return a_ == IntMatrix::Identity(dim());
}

bool AffineTorusMap::IsIdentity() const {
  return IsTranslation() &&
         std::all_of(t_.begin(), t_.end(),
                     [](const SymScalar& s) { return s.IsZero(); });
}

void AffineTorusMap::ApplyApprox(std::span<const double> x,
                                 std::span<double> out, double alpha,
                                 double beta) const {
  const std::size_t k = dim();
  for (std::size_t i = 0; i < k; ++i) {
    double v = t_[i].Evaluate(alpha, beta);
    for (std::size_t j = 0; j < k; ++j) {
      if (a_(i, j) != 0) v += static_cast<double>(a_(i, j)) * x[j];
    }
    out[i] = v - std::floor(v);
  }
}

AffineTorusMap Compose(const AffineTorusMap& g, const AffineTorusMap& h) {
  RequireSameDim(g, h);
  return AffineTorusMap(g.matrix() * h.matrix(),
                        Add(MultiplyVector(g.matrix(), h.translation()),
                            g.translation()));
}

AffineTorusMap Inverse(const AffineTorusMap& g) {
  const std::size_t k = g.dim();
  // A = I - N with N nilpotent, so A^-1 = I + N + ... + N^(k-1).
  const IntMatrix id = IntMatrix::Identity(k);
  const IntMatrix n = id - g.matrix();
  IntMatrix inv = id;
  IntMatrix p = id;
  for (std::size_t i = 1; i < k; ++i) {
    p = p * n;
    inv = inv + p;
  }
  SymVector t = MultiplyVector(inv, g.translation());
  for (auto& s : t) s = -s;
  return AffineTorusMap(std::move(inv), std::move(t));
}

AffineTorusMap Power(const AffineTorusMap& g, std::int64_t n) {
  if (n < 0) return Power(Inverse(g), -n);
  const std::size_t k = g.dim();
  // Square-and-multiply on the pair (A^e, sum_{i<e} A^i).
  IntMatrix result_a = IntMatrix::Identity(k);
  IntMatrix result_s(k, k);
  IntMatrix base_a = g.matrix();
  IntMatrix base_s = IntMatrix::Identity(k);
  for (std::uint64_t e = static_cast<std::uint64_t>(n); e > 0; e >>= 1) {
    if (e & 1) {
      result_s = result_s + result_a * base_s;
      result_a = result_a * base_a;
    }
    if (e > 1) {
      base_s = base_s + base_a * base_s;
      base_a = base_a * base_a;
    }
  }
  return AffineTorusMap(std::move(result_a),
                        MultiplyVector(result_s, g.translation()));
}

AffineTorusMap Commutator(const AffineTorusMap& g, const AffineTorusMap& h) {
  RequireSameDim(g, h);
  return Compose(Compose(g, h), Compose(Inverse(g), Inverse(h)));
}

AffineTorusMap CommutatorShortcut(const AffineTorusMap& g,
                                  const AffineTorusMap& h) {
  RequireSameDim(g, h);
  const IntMatrix id = IntMatrix::Identity(g.dim());
  return AffineTorusMap(
      id, Add(MultiplyVector(g.matrix() - id, h.translation()),
              MultiplyVector(h.matrix() - id, g.translation())));
}

CommuteReport CheckCommute(const AffineTorusMap& g, const AffineTorusMap& h) {
  RequireSameDim(g, h);
  CommuteReport report;
  report.commute = Compose(g, h) == Compose(h, g);
  report.criterion_applicable =
      g.matrix() * h.matrix() == h.matrix() * g.matrix();
  if (report.criterion_applicable) {
    const IntMatrix id = IntMatrix::Identity(g.dim());
    report.criterion = MultiplyVector(g.matrix() - id, h.translation()) ==
                       MultiplyVector(h.matrix() - id, g.translation());
    if (report.criterion != report.commute) {
      throw Error(Errc::kConsistency,
                  "commutation criterion disagrees with direct composition");
    }
  }
  return report;
}

std::optional<int> NilpotencyClass(std::span<const AffineTorusMap> generators,
                                   int max_depth) {
  if (max_depth < 1) throw Error(Errc::kDomain, "max_depth must be >= 1");
  std::vector<AffineTorusMap> alphabet;
  auto add_unique = [](std::vector<AffineTorusMap>& set,
                       const AffineTorusMap& m) {
    if (m.IsIdentity()) return;
    if (std::find(set.begin(), set.end(), m) == set.end()) set.push_back(m);
  };
  for (const auto& g : generators) {
    add_unique(alphabet, g);
    add_unique(alphabet, Inverse(g));
  }
  std::vector<AffineTorusMap> level = alphabet;
  for (int depth = 1; depth <= max_depth; ++depth) {
    std::vector<AffineTorusMap> next;
    for (const auto& a : level) {
      for (const auto& g : alphabet) {
        const AffineTorusMap c = Commutator(a, g);
        add_unique(next, c);
        add_unique(next, Inverse(c));
      }
    }
    if (next.empty()) return depth;
    level = std::move(next);
  }
  return std::nullopt;
}

}  // namespace nilrec::dynamics
