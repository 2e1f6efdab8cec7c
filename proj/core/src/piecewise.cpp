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

#include "nilrec/piecewise.hpp"

#include <algorithm>

#include "nilrec/error.hpp"

namespace nilrec::torus {

Polynomial::Polynomial(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  Trim();
}

Polynomial Polynomial::Constant(Rational c) {
  return Polynomial(std::vector<Rational>{std::move(c)});
}

Polynomial Polynomial::Linear(const Rational& x0, const Rational& y0,
                              const Rational& x1, const Rational& y1) {
  if (x0 == x1) throw Error(Errc::kDomain, "degenerate interpolation nodes");
  const Rational slope = (y1 - y0) / (x1 - x0);
  return Polynomial({y0 - slope * x0, slope});
}

void Polynomial::Trim() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.emplace_back(0);
}

Rational Polynomial::operator()(const Rational& c) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * c + *it;
  }
  return acc;
}

Rational Polynomial::Integral(const Rational& a, const Rational& b) const {
  Rational total = 0;
  Rational pa = a;
  Rational pb = b;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) {
      total += coeffs_[k] * (pb - pa) / static_cast<long>(k + 1);
    }
    pa *= a;
    pb *= b;
  }
  return total;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Polynomial(std::move(out));
}

PiecewisePolynomial::PiecewisePolynomial(std::vector<Rational> breakpoints,
                                         std::vector<Polynomial> pieces)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  if (breakpoints_.size() < 2 || breakpoints_.front() != 0 ||
      breakpoints_.back() != 1) {
    throw Error(Errc::kStructure, "breakpoints must run from 0 to 1");
  }
  if (!std::is_sorted(breakpoints_.begin(), breakpoints_.end()) ||
      std::adjacent_find(breakpoints_.begin(), breakpoints_.end()) !=
          breakpoints_.end()) {
    throw Error(Errc::kStructure, "breakpoints must be strictly increasing");
  }
  if (pieces_.size() + 1 != breakpoints_.size()) {
    throw Error(Errc::kStructure, "need one piece per breakpoint gap");
  }
}

PiecewisePolynomial PiecewisePolynomial::Constant(Rational c) {
  return PiecewisePolynomial({Rational(0), Rational(1)},
                             {Polynomial::Constant(std::move(c))});
}

std::size_t PiecewisePolynomial::PieceIndex(const Rational& c) const {
  auto it = std::upper_bound(breakpoints_.begin() + 1, breakpoints_.end() - 1, c);
  return static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
}

Rational PiecewisePolynomial::operator()(const Rational& c) const {
  return pieces_[PieceIndex(c)](c);
}

Rational PiecewisePolynomial::Integral() const {
  Rational total = 0;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    total += pieces_[i].Integral(breakpoints_[i], breakpoints_[i + 1]);
  }
  return total;
}

Rational IntegrateProduct(std::span<const PiecewisePolynomial> profiles) {
  if (profiles.empty()) return Rational(1);
  if (profiles.size() == 1) return profiles[0].Integral();

  std::vector<Rational> cuts;
  for (const auto& f : profiles) {
    cuts.insert(cuts.end(), f.breakpoints().begin(), f.breakpoints().end());
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  // Walk every profile's piece index forward alongside the refined cuts.
  std::vector<std::size_t> piece(profiles.size(), 0);
  Rational total = 0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Polynomial product = Polynomial::Constant(1);
    bool zero = false;
    for (std::size_t f = 0; f < profiles.size() && !zero; ++f) {
      const auto bps = profiles[f].breakpoints();
      while (bps[piece[f] + 1] <= cuts[i]) ++piece[f];
      const Polynomial& p = profiles[f].pieces()[piece[f]];
      if (p.degree() == 0 && p.coeffs()[0] == 0) {
        zero = true;
      } else {
        product = product * p;
      }
    }
    if (!zero) total += product.Integral(cuts[i], cuts[i + 1]);
  }
  return total;
}

}  // namespace nilrec::torus
