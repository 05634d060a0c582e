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

#include "klyachko/toric_core.hpp"
#include "klyachko/types.hpp"

#include <string>
#include <vector>

namespace klyachko {

bool divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);

/// Total degree ascending, then exponent vectors in descending lex order.
bool canonical_less(const Monomial& a, const Monomial& b);

/// "x0*x1^2" style rendering; "1" for the unit monomial.
std::string monomial_string(const Monomial& m, const std::vector<std::string>& variables);

/// Monomial ideal held by its minimal generators in canonical order. The
/// zero ideal has no generators; the unit ideal is generated by 1.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens);

  static MonomialIdeal zero(std::size_t nvars) { return MonomialIdeal(nvars, {}); }
  static MonomialIdeal unit(std::size_t nvars) { return MonomialIdeal(nvars, {Monomial(IntVec(nvars, 0))}); }

  std::size_t nvars() const { return nvars_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool contains(const Monomial& m) const;

  bool operator==(const MonomialIdeal&) const = default;

 private:
  std::size_t nvars_ = 0;
  std::vector<Monomial> gens_;
};

/// Divisibility-minimal subset generating the same ideal.
MonomialIdeal minimalize(std::size_t nvars, std::vector<Monomial> gens);

/// (I : x_i^infinity).
MonomialIdeal colon_var_saturate(const MonomialIdeal& ideal, std::size_t i);
/// (I : f^infinity) for the squarefree monomial f.
MonomialIdeal colon_saturate(const MonomialIdeal& ideal, const Monomial& f);

MonomialIdeal ideal_intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);

/// I^sat = intersection over maximal cones of (I : (x^sigma-hat)^infinity),
/// computed purely by exponent manipulation.
MonomialIdeal saturate_oracle(const MonomialIdeal& ideal, const Fan& fan);

/// s_rho = minimum exponent of x_rho over the generators.
IntVec min_exponents(const MonomialIdeal& ideal);

/// All monomials of the given class, sorted canonically. Throws Error if the
/// fiber is infinite ("grading not pointed for this fan").
std::vector<Monomial> monomials_of_degree(const CoxGrading& grading, const ClassDegree& alpha);

/// Number of degree-alpha monomials outside I, i.e. dim (R/I)_alpha.
Int hilbert_oracle(const MonomialIdeal& ideal, const CoxGrading& grading, const ClassDegree& alpha);

}  // namespace klyachko
