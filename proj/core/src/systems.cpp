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

#include "nilrec/systems.hpp"

#include "nilrec/error.hpp"

namespace nilrec::dynamics {

const char* SystemKindName(SystemKind kind) {
  switch (kind) {
    case SystemKind::kT11:
      return "t11";
    case SystemKind::kT12:
      return "t12";
    case SystemKind::kT13:
      return "t13";
  }
  return "?";
}

SystemKind ParseSystemKind(const std::string& text) {
  if (text == "t11") return SystemKind::kT11;
  if (text == "t12") return SystemKind::kT12;
  if (text == "t13") return SystemKind::kT13;
  throw Error(Errc::kParse, "unknown system '" + text + "'");
}

AffineTorusMap RecurrenceSystem::RoleMap(int role) const {
  const int g = roles.at(static_cast<std::size_t>(role));
  if (g < 0) return AffineTorusMap::Identity(dim());
  return generators.at(static_cast<std::size_t>(g)).map;
}

std::string RecurrenceSystem::RoleName(int role) const {
  const int g = roles.at(static_cast<std::size_t>(role));
  return g < 0 ? std::string("id") : generators.at(static_cast<std::size_t>(g)).name;
}

namespace {

const SymScalar kA = SymScalar::Alpha();
const SymScalar kB = SymScalar::Beta();
const SymScalar k0;

RecurrenceSystem T11() {
  // (x1, x2, x3; y1, y2, y3)
  AffineTorusMap t1({{1, 0, 0, 0, 0, 0},
                     {0, 1, 0, 0, 0, 0},
                     {0, 0, 1, 0, 0, 0},
                     {1, 0, 0, 1, 0, 0},
                     {0, 0, 0, 0, 1, 0},
                     {1, 1, 1, 0, 0, 1}},
                    {kA, kB, k0, k0, k0, k0});
  AffineTorusMap t2({{1, 0, 0, 0, 0, 0},
                     {0, 1, 0, 0, 0, 0},
                     {0, 0, 1, 0, 0, 0},
                     {0, 0, 0, 1, 0, 0},
                     {0, 0, 1, 0, 1, 0},
                     {1, 1, 1, 0, 0, 1}},
                    {k0, kB, kA, k0, k0, k0});
  RecurrenceSystem s{SystemKind::kT11,
                     {"x1", "x2", "x3", "y1", "y2", "y3"},
                     {{"T1", t1}, {"T2", t2}},
                     {-1, 0, 1},
                     {3, 4, 5},
                     {0, 1, 2},
                     true,
                     {}};
  // As written in the usual statement of this example; the y2 entry does
  // not match T2 (which adds x3), and ReduceShifts reports it.
  s.declared = {{1, 0, {1, 0, 0}, kA},
                {2, 1, {0, 1, 0}, kA},
                {1, 2, {1, 1, 1}, kA + kB},
                {2, 2, {1, 1, 1}, kA + kB}};
  return s;
}

RecurrenceSystem T12() {
  AffineTorusMap t1({{1, 0, 0}, {0, 1, 0}, {0, 1, 1}}, {kA, k0, k0});
  AffineTorusMap t3({{1, 0, 0}, {0, 1, 0}, {1, 0, 1}}, {k0, kA, k0});
  RecurrenceSystem s{SystemKind::kT12,
                     {"x", "y", "z"},
                     {{"T1", t1}, {"T2", Compose(t1, t1)}, {"T3", t3}},
                     {-1, 0, 1, 2},
                     {2},
                     {0, 1},
                     true,
                     {}};
  s.declared = {{1, 0, {0, 1}, k0}, {2, 0, {0, 2}, k0}, {3, 0, {1, 0}, k0}};
  return s;
}

RecurrenceSystem T13() {
  AffineTorusMap t1({{1, 0, 0}, {1, 1, 0}, {0, 0, 1}}, {kA, k0, k0});
  AffineTorusMap t2({{1, 0, 0}, {0, 1, 0}, {1, 0, 1}}, {kA, k0, k0});
  RecurrenceSystem s{SystemKind::kT13,
                     {"x", "y", "z"},
                     {{"T1", t1}, {"T2", t2}},
                     {-1, 0, 1},
                     {1, 2},
                     {0},
                     false,
                     {}};
  s.declared = {{1, 0, {1}, kA}, {2, 1, {1}, kA}};
  return s;
}

}  // namespace

RecurrenceSystem BuiltinSystem(SystemKind kind) {
  switch (kind) {
    case SystemKind::kT11:
      return T11();
    case SystemKind::kT12:
      return T12();
    case SystemKind::kT13:
      return T13();
  }
  throw Error(Errc::kDomain, "unknown system");
}

}  // namespace nilrec::dynamics
