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

#ifndef NILREC_PIECEWISE_HPP_
#define NILREC_PIECEWISE_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "nilrec/numeric.hpp"

namespace nilrec::torus {

// Dense polynomial in one variable with rational coefficients;
// coeffs()[k] multiplies c^k.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial Constant(Rational c);
  // Line through (x0, y0) and (x1, y1), x0 != x1.
  static Polynomial Linear(const Rational& x0, const Rational& y0,
                           const Rational& x1, const Rational& y1);

  std::span<const Rational> coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational operator()(const Rational& c) const;
  // Exact integral over [a, b].
  Rational Integral(const Rational& a, const Rational& b) const;

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

 private:
  void Trim();
  std::vector<Rational> coeffs_;
};

// Function on [0, 1] that is polynomial between consecutive breakpoints.
class PiecewisePolynomial {
 public:
  PiecewisePolynomial(std::vector<Rational> breakpoints,
                      std::vector<Polynomial> pieces);
  static PiecewisePolynomial Constant(Rational c);

  std::span<const Rational> breakpoints() const { return breakpoints_; }
  std::span<const Polynomial> pieces() const { return pieces_; }

  std::size_t PieceIndex(const Rational& c) const;
  Rational operator()(const Rational& c) const;
  Rational Integral() const;

 private:
  std::vector<Rational> breakpoints_;
  std::vector<Polynomial> pieces_;
};

// Exact integral over [0, 1] of the pointwise product; the empty product is
// the constant 1.
Rational IntegrateProduct(std::span<const PiecewisePolynomial> profiles);

}  // namespace nilrec::torus

#endif  // NILREC_PIECEWISE_HPP_
