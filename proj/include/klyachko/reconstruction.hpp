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

#include "klyachko/diagram.hpp"
#include "klyachko/monomial.hpp"
#include "klyachko/toric_core.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace klyachko {

/// x^(phi(m) + D).
Monomial character_to_monomial(const Fan& fan, const Character& m, const Divisor& d);
/// The m with x^(phi(m) + D) = k; requires deg k = [D].
Character monomial_to_character(const Fan& fan, const Monomial& k, const Divisor& d);

/// Characters m in C_0(D) naming the monomials x^(m+D) of I^sat in degree [D].
struct GradedPiece {
  ClassDegree degree;
  Divisor lift;
  std::vector<Character> basis;

  std::vector<Monomial> monomials(const Fan& fan) const;
};

GradedPiece graded_basis(const ToricVariety& X, const KlyachkoDiagram& diag, const Divisor& d);

/// A generator x^(m+D) given by its character and the divisor it was read in.
using SpanGenerator = std::pair<Character, Divisor>;

struct SpanSet {
  ClassDegree degree;
  std::vector<Character> covered;
};

/// Points of C_0(E) whose monomials are divisible by one of the generators.
SpanSet span_set(const ToricVariety& X, const std::vector<SpanGenerator>& gens, const Divisor& e);

/// Closed range per class-group coordinate.
struct SearchBox {
  std::vector<std::pair<Int, Int>> ranges;
};

struct ReconstructionResult {
  /// Nonempty G_u in iteration order.
  std::vector<std::pair<ClassDegree, std::vector<Monomial>>> by_degree;
  std::vector<Monomial> pre_minimal;
  MonomialIdeal ideal;
};

/// Per-ray bound K with every minimal generator of the saturated ideal
/// dividing x^K: the largest of s_rho and one past every finite bound of a
/// Delta cell on rho over the maximal cones.
IntVec generator_exponent_bound(const KlyachkoDiagram& diag, const Fan& fan);

/// Recovers the minimal generators of I^sat from the diagram. Without a box
/// the degrees of all x^k with k <= generator_exponent_bound are scanned,
/// which provably contains every minimal generator. With an explicit box,
/// a nonempty G_u on an upper face raises SearchBoxTooSmall.
ReconstructionResult reconstruct_generators(const ToricVariety& X, const KlyachkoDiagram& diag,
                                            const std::optional<SearchBox>& box = std::nullopt);

/// Basis of H^1_B(I) in degree [D]: monomials of I^sat not in I.
GradedPiece local_cohomology_h1(const ToricVariety& X, const MonomialIdeal& ideal, const KlyachkoDiagram& diag,
                                const Divisor& d);

/// Nonzero H^1_B(I) pieces over the degrees of x^k, 0 <= k <= E, where E
/// dominates both the generator exponents of I and generator_exponent_bound.
/// Degrees outside that set are not scanned.
std::vector<GradedPiece> local_cohomology_h1_scan(const ToricVariety& X, const MonomialIdeal& ideal,
                                                  const KlyachkoDiagram& diag);

/// Lexicographic by coordinate sum, then by coordinates; a linear extension
/// of the componentwise order.
bool degree_order_less(const ClassDegree& a, const ClassDegree& b);

/// Distinct degrees of x^k for 0 <= k <= bound, sorted by degree_order_less.
std::vector<ClassDegree> degrees_below(const CoxGrading& grading, const IntVec& bound);

}  // namespace klyachko
