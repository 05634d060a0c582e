/*
 * Copyright 2026 The klyachko authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "klyachko/integer.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace klyachko {

/// Sorted list of ray indices.
using Cone = std::vector<int>;

/// Element of the character lattice M = Z^n.
struct Character {
  IntVec coords;

  Character() = default;
  explicit Character(IntVec c) : coords(std::move(c)) {}
  Character(std::initializer_list<Int> c) : coords(c) {}

  std::size_t size() const { return coords.size(); }
  Int operator[](std::size_t i) const { return coords[i]; }
  auto operator<=>(const Character&) const = default;
};

/// Exponent vector of a monomial in the Cox ring; entries are >= 0.
struct Monomial {
  IntVec exps;

  Monomial() = default;
  explicit Monomial(IntVec e) : exps(std::move(e)) {}
  Monomial(std::initializer_list<Int> e) : exps(e) {}

  std::size_t size() const { return exps.size(); }
  Int operator[](std::size_t i) const { return exps[i]; }
  Int total_degree() const;
  auto operator<=>(const Monomial&) const = default;
};

/// Element of Cl(X) = Z^l in the coordinates of the chosen basis.
struct ClassDegree {
  IntVec coords;

  ClassDegree() = default;
  explicit ClassDegree(IntVec c) : coords(std::move(c)) {}
  ClassDegree(std::initializer_list<Int> c) : coords(c) {}

  std::size_t size() const { return coords.size(); }
  Int operator[](std::size_t i) const { return coords[i]; }
  auto operator<=>(const ClassDegree&) const = default;
};

/// Torus-invariant Weil divisor sum_rho a_rho D_rho, i.e. a vector in Z^r.
struct Divisor {
  IntVec coeffs;

  Divisor() = default;
  explicit Divisor(IntVec c) : coeffs(std::move(c)) {}
  Divisor(std::initializer_list<Int> c) : coeffs(c) {}

  std::size_t size() const { return coeffs.size(); }
  Int operator[](std::size_t i) const { return coeffs[i]; }
  auto operator<=>(const Divisor&) const = default;
};

inline Int Monomial::total_degree() const {
  Int t = 0;
  for (Int e : exps) t = checked_add(t, e);
  return t;
}

}  // namespace klyachko
