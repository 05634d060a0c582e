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

#include "klyachko/monomial.hpp"

#include "klyachko/errors.hpp"
#include "klyachko/polytope.hpp"

#include <algorithm>
#include <set>

namespace klyachko {

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  IntVec e(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  const Int ta = a.total_degree(), tb = b.total_degree();
  if (ta != tb) return ta < tb;
  return a.exps > b.exps;
}

std::string monomial_string(const Monomial& m, const std::vector<std::string>& variables) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += i < variables.size() ? variables[i] : "x" + std::to_string(i);
    if (m[i] != 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens) : nvars_(nvars) {
  for (const auto& g : gens) {
    if (g.size() != nvars) throw InputError("generator has " + std::to_string(g.size()) + " exponents, expected " +
                                            std::to_string(nvars));
    for (Int e : g.exps)
      if (e < 0) throw InputError("negative exponent in generator " + to_string(g.exps));
  }
  std::sort(gens.begin(), gens.end(), canonical_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // In canonical order a divisor always precedes its proper multiples.
  for (auto& g : gens) {
    bool redundant = false;
    for (const auto& h : gens_)
      if (divides(h, g)) {
        redundant = true;
        break;
      }
    if (!redundant) gens_.push_back(std::move(g));
  }
}

bool MonomialIdeal::is_unit() const {
  return std::any_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.total_degree() == 0; });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return divides(g, m); });
}

MonomialIdeal minimalize(std::size_t nvars, std::vector<Monomial> gens) { return MonomialIdeal(nvars, std::move(gens)); }

MonomialIdeal colon_var_saturate(const MonomialIdeal& ideal, std::size_t i) {
  std::vector<Monomial> gens = ideal.gens();
  for (auto& g : gens) g.exps.at(i) = 0;
  return MonomialIdeal(ideal.nvars(), std::move(gens));
}

MonomialIdeal colon_saturate(const MonomialIdeal& ideal, const Monomial& f) {
  MonomialIdeal out = ideal;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] > 0) out = colon_var_saturate(out, i);
  return out;
}

MonomialIdeal ideal_intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> gens;
  for (const auto& g : a.gens())
    for (const auto& h : b.gens()) gens.push_back(lcm(g, h));
  return MonomialIdeal(a.nvars(), std::move(gens));
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return MonomialIdeal(a.nvars(), std::move(gens));
}

MonomialIdeal saturate_oracle(const MonomialIdeal& ideal, const Fan& fan) {
  if (ideal.nvars() != fan.num_rays()) throw InputError("ideal and fan have different numbers of variables");
  std::optional<MonomialIdeal> out;
  for (const auto& f : irrelevant_generators(fan)) {
    MonomialIdeal part = colon_saturate(ideal, f);
    out = out ? ideal_intersect(*out, part) : part;
  }
  return out ? *out : ideal;
}

IntVec min_exponents(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw InputError("zero ideal has no minimal exponents");
  IntVec s = ideal.gens().front().exps;
  for (const auto& g : ideal.gens())
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = std::min(s[i], g[i]);
  return s;
}

std::vector<Monomial> monomials_of_degree(const CoxGrading& grading, const ClassDegree& alpha) {
  if (alpha.size() != grading.ell) throw InputError("degree " + to_string(alpha.coords) + " has the wrong length");
  // The basis-ray exponents are determined by the others:
  // k_basis = alpha - N k_free, where N collects the free columns.
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < grading.r; ++j)
    if (std::find(grading.basis_rays.begin(), grading.basis_rays.end(), static_cast<int>(j)) == grading.basis_rays.end())
      free.push_back(j);
  IntegerPolyhedron poly(free.size());
  for (std::size_t i = 0; i < free.size(); ++i) {
    IntVec a(free.size(), 0);
    a[i] = 1;
    poly.add_lower(a, 0);
  }
  for (std::size_t k = 0; k < grading.ell; ++k) {
    IntVec a(free.size());
    for (std::size_t i = 0; i < free.size(); ++i) a[i] = grading.deg_matrix[k][free[i]];
    poly.add_upper(std::move(a), alpha[k]);
  }
  std::vector<Monomial> out;
  try {
    poly.for_each_point([&](const IntVec& kf) {
      IntVec e(grading.r, 0);
      for (std::size_t i = 0; i < free.size(); ++i) e[free[i]] = kf[i];
      for (std::size_t k = 0; k < grading.ell; ++k) {
        Int v = alpha[k];
        for (std::size_t i = 0; i < free.size(); ++i) v = checked_sub(v, checked_mul(grading.deg_matrix[k][free[i]], kf[i]));
        e[grading.basis_rays[k]] = v;
      }
      out.emplace_back(std::move(e));
    });
  } catch (const Unbounded&) {
    throw Error("grading not pointed for this fan");
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

Int hilbert_oracle(const MonomialIdeal& ideal, const CoxGrading& grading, const ClassDegree& alpha) {
  Int count = 0;
  for (const auto& m : monomials_of_degree(grading, alpha))
    if (!ideal.contains(m)) ++count;
  return count;
}

}  // namespace klyachko
