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

#include "klyachko/hilbert.hpp"

#include "klyachko/errors.hpp"

namespace klyachko {

namespace {

Int polytope_size(const ToricVariety& X, const ClassDegree& alpha) {
  return static_cast<Int>(polytope_points(X.fan(), X.grading().canonical_lift(alpha)).size());
}

}  // namespace

Int hilbert_value(const ToricVariety& X, const KlyachkoDiagram& diag, const ClassDegree& alpha) {
  const Divisor d = X.grading().canonical_lift(alpha);
  std::vector<LatticeRegion> inside;
  for (const auto& e : shift_diagram(diag, X.fan(), d)) inside.push_back(e.C.difference(e.delta));
  const auto all = polytope_points(X.fan(), d);
  Int count = 0;
  for (const auto& m : all) {
    for (const auto& reg : inside)
      if (!reg.contains(m)) {
        ++count;
        break;
      }
  }
  return count;
}

Int hilbert_value_general(const ToricVariety& X, const MonomialIdeal& ideal, const ClassDegree& alpha) {
  const IntVec s = min_exponents(ideal);
  std::vector<Monomial> reduced;
  for (const auto& g : ideal.gens()) reduced.emplace_back(sub(g.exps, s));
  const MonomialIdeal i0(ideal.nvars(), std::move(reduced));
  const ClassDegree shifted(sub(alpha.coords, X.grading().degree(s).coords));
  const KlyachkoDiagram d0 = compute_diagram(i0, X.fan());
  return checked_add(checked_sub(polytope_size(X, alpha), polytope_size(X, shifted)), hilbert_value(X, d0, shifted));
}

ConstancyVerdict constant_hilbert_poly(const KlyachkoDiagram& diag, const Fan& fan) {
  ConstancyVerdict out;
  bool all_finite = true;
  for (const DiagramEntry* e : maximal_entries(diag, fan)) {
    ConeFiniteness f{e->cone, true, std::nullopt};
    if (int w = e->delta.infinite_witness(); w >= 0) {
      f.finite = false;
      f.witness = e->delta.cells()[w];
      all_finite = false;
      if (out.reason.empty())
        out.reason = "Delta over cone " + to_string(IntVec(e->cone.begin(), e->cone.end())) + " is infinite: " +
                     cell_string(e->cone, e->delta.cells()[w]);
    }
    out.cones.push_back(std::move(f));
  }
  for (std::size_t i = 0; i < diag.s.size(); ++i)
    if (diag.s[i] != 0) {
      out.reason = "s_" + std::to_string(i) + " = " + std::to_string(diag.s[i]) + " is nonzero";
      return out;
    }
  if (!all_finite) return out;
  Int total = 0;
  for (const DiagramEntry* e : maximal_entries(diag, fan)) total = checked_add(total, e->delta.count());
  out.value = total;
  return out;
}

HilbertReport hilbert_report(const ToricVariety& X, const MonomialIdeal& ideal, const std::vector<ClassDegree>& degrees) {
  if (ideal.is_zero()) throw InputError("the zero ideal has no Klyachko diagram");
  HilbertReport out;
  for (const auto& a : degrees) out.values[a] = hilbert_value_general(X, ideal, a);
  out.constancy = constant_hilbert_poly(compute_diagram(ideal, X.fan()), X.fan());
  return out;
}

}  // namespace klyachko
