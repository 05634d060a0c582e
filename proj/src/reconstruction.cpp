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

#include "klyachko/reconstruction.hpp"

#include "klyachko/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace klyachko {

Monomial character_to_monomial(const Fan& fan, const Character& m, const Divisor& d) {
  return Monomial(add(phi(fan, m), d.coeffs));
}

Character monomial_to_character(const Fan& fan, const Monomial& k, const Divisor& d) {
  auto m = phi_preimage(fan, sub(k.exps, d.coeffs));
  if (!m) throw InputError("monomial " + to_string(k.exps) + " is not of degree [" + to_string(d.coeffs) + "]");
  return *m;
}

std::vector<Monomial> GradedPiece::monomials(const Fan& fan) const {
  std::vector<Monomial> out;
  for (const auto& m : basis) out.push_back(character_to_monomial(fan, m, lift));
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

GradedPiece graded_basis(const ToricVariety& X, const KlyachkoDiagram& diag, const Divisor& d) {
  std::vector<LatticeRegion> regions;
  for (const auto& e : shift_diagram(diag, X.fan(), d)) regions.push_back(e.C.difference(e.delta));
  return {X.grading().degree(d), d, enumerate_in_polytope(X.fan(), d, regions, Combine::kAll)};
}

SpanSet span_set(const ToricVariety& X, const std::vector<SpanGenerator>& gens, const Divisor& e) {
  const Fan& fan = X.fan();
  std::vector<Monomial> divisors;
  for (const auto& [m, d] : gens) divisors.push_back(character_to_monomial(fan, m, d));
  SpanSet out{X.grading().degree(e), {}};
  for (const auto& p : polytope_points(fan, e)) {
    const Monomial k = character_to_monomial(fan, p, e);
    if (std::any_of(divisors.begin(), divisors.end(), [&](const Monomial& g) { return divides(g, k); }))
      out.covered.push_back(p);
  }
  return out;
}

bool degree_order_less(const ClassDegree& a, const ClassDegree& b) {
  const Int sa = std::accumulate(a.coords.begin(), a.coords.end(), Int{0});
  const Int sb = std::accumulate(b.coords.begin(), b.coords.end(), Int{0});
  if (sa != sb) return sa < sb;
  return a < b;
}

std::vector<ClassDegree> degrees_below(const CoxGrading& grading, const IntVec& bound) {
  std::set<ClassDegree> seen;
  IntVec k(grading.r, 0);
  while (true) {
    seen.insert(grading.degree(k));
    std::size_t i = 0;
    while (i < k.size() && k[i] == bound[i]) {
      k[i] = 0;
      ++i;
    }
    if (i == k.size()) break;
    ++k[i];
  }
  std::vector<ClassDegree> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), degree_order_less);
  return out;
}

IntVec generator_exponent_bound(const KlyachkoDiagram& diag, const Fan& fan) {
  IntVec bound = diag.s;
  for (const DiagramEntry* e : maximal_entries(diag, fan))
    for (const auto& cell : e->delta.cells())
      for (std::size_t p = 0; p < cell.bounds.size(); ++p) {
        Int& b = bound[e->cone[p]];
        if (cell.bounds[p].hi != kPosInf) b = std::max(b, checked_add(cell.bounds[p].hi, 1));
        if (cell.bounds[p].lo != kNegInf) b = std::max(b, checked_add(cell.bounds[p].lo, 1));
      }
  return bound;
}

namespace {

bool weakly_below(const ClassDegree& v, const ClassDegree& u) {
  for (std::size_t i = 0; i < u.size(); ++i)
    if (v[i] > u[i]) return false;
  return true;
}

std::vector<ClassDegree> box_degrees(const SearchBox& box) {
  std::vector<ClassDegree> out;
  IntVec u;
  for (const auto& [lo, hi] : box.ranges) {
    if (lo > hi) return out;
    u.push_back(lo);
  }
  while (true) {
    out.emplace_back(u);
    std::size_t i = 0;
    while (i < u.size() && u[i] == box.ranges[i].second) {
      u[i] = box.ranges[i].first;
      ++i;
    }
    if (i == u.size()) break;
    ++u[i];
  }
  std::sort(out.begin(), out.end(), degree_order_less);
  return out;
}

}  // namespace

ReconstructionResult reconstruct_generators(const ToricVariety& X, const KlyachkoDiagram& diag,
                                            const std::optional<SearchBox>& box) {
  const Fan& fan = X.fan();
  const CoxGrading& grading = X.grading();
  if (diag.s.size() != fan.num_rays()) throw FanMismatch("diagram and fan have different numbers of rays");
  if (box && box->ranges.size() != grading.ell)
    throw InputError("search box needs " + std::to_string(grading.ell) + " ranges");
  ReconstructionResult out;

  const auto maximal = maximal_entries(diag, fan);
  const bool principal =
      std::all_of(maximal.begin(), maximal.end(), [](const DiagramEntry* e) { return e->delta.is_empty(); });
  if (principal && !box) {
    Monomial g(diag.s);
    out.by_degree.push_back({grading.degree(g), {g}});
    out.pre_minimal = {g};
    out.ideal = MonomialIdeal(fan.num_rays(), {g});
    return out;
  }

  const std::vector<ClassDegree> degrees =
      box ? box_degrees(*box) : degrees_below(grading, generator_exponent_bound(diag, fan));
  std::vector<std::pair<ClassDegree, Monomial>> found;
  for (const auto& u : degrees) {
    const Divisor lift = grading.canonical_lift(u);
    std::vector<Monomial> fresh;
    for (const auto& k : graded_basis(X, diag, lift).monomials(fan)) {
      const bool spanned = std::any_of(found.begin(), found.end(), [&](const auto& vg) {
        return vg.first != u && weakly_below(vg.first, u) && divides(vg.second, k);
      });
      if (!spanned) fresh.push_back(k);
    }
    if (fresh.empty()) continue;
    if (box) {
      for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] == box->ranges[i].second)
          throw SearchBoxTooSmall("search box too small: new generators in degree " + to_string(u.coords) +
                                  " on its boundary");
    }
    for (const auto& k : fresh) {
      found.emplace_back(u, k);
      out.pre_minimal.push_back(k);
    }
    out.by_degree.emplace_back(u, std::move(fresh));
  }
  out.ideal = MonomialIdeal(fan.num_rays(), out.pre_minimal);
  return out;
}

GradedPiece local_cohomology_h1(const ToricVariety& X, const MonomialIdeal& ideal, const KlyachkoDiagram& diag,
                                const Divisor& d) {
  GradedPiece sat = graded_basis(X, diag, d);
  GradedPiece out{sat.degree, d, {}};
  for (const auto& m : sat.basis)
    if (!ideal.contains(character_to_monomial(X.fan(), m, d))) out.basis.push_back(m);
  return out;
}

std::vector<GradedPiece> local_cohomology_h1_scan(const ToricVariety& X, const MonomialIdeal& ideal,
                                                  const KlyachkoDiagram& diag) {
  IntVec bound = generator_exponent_bound(diag, X.fan());
  for (const auto& g : ideal.gens())
    for (std::size_t i = 0; i < bound.size(); ++i) bound[i] = std::max(bound[i], g[i]);
  std::vector<GradedPiece> out;
  for (const auto& u : degrees_below(X.grading(), bound)) {
    GradedPiece p = local_cohomology_h1(X, ideal, diag, X.grading().canonical_lift(u));
    if (!p.basis.empty()) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace klyachko
