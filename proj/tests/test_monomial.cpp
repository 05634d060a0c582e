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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "klyachko/check.hpp"
#include "klyachko/monomial.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace klyachko;

namespace {

std::vector<Monomial> box_monomials(std::size_t nvars, Int max) {
  std::vector<Monomial> out;
  IntVec e(nvars, 0);
  while (true) {
    out.emplace_back(e);
    std::size_t i = 0;
    while (i < nvars && e[i] == max) e[i++] = 0;
    if (i == nvars) break;
    ++e[i];
  }
  return out;
}

// Pairwise filter, written without relying on canonical ordering.
std::set<Monomial> pairwise_minimal(const std::vector<Monomial>& gens) {
  std::set<Monomial> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < gens.size() && keep; ++j) {
      if (gens[i] == gens[j]) {
        if (j < i) keep = false;
        continue;
      }
      if (divides(gens[j], gens[i])) keep = false;
    }
    if (keep) out.insert(gens[i]);
  }
  return out;
}

}  // namespace

TEST_CASE("minimalize") {
  const MonomialIdeal I = minimalize(4, {{0, 1, 0, 0}, {3, 0, 0, 1}, {2, 1, 0, 1}, {1, 2, 0, 1}, {0, 3, 0, 1}});
  CHECK(I.gens() == std::vector<Monomial>{{0, 1, 0, 0}, {3, 0, 0, 1}});
  CHECK(minimalize(1, {{1}, {2}}).gens() == std::vector<Monomial>{{1}});
  CHECK(minimalize(3, {}).is_zero());

  std::mt19937_64 rng(1);
  std::uniform_int_distribution<Int> e(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Monomial> gens(10, Monomial(IntVec(4)));
    for (auto& g : gens)
      for (auto& x : g.exps) x = e(rng);
    const auto mine = minimalize(4, gens).gens();
    CHECK(std::set<Monomial>(mine.begin(), mine.end()) == pairwise_minimal(gens));
  }
}

TEST_CASE("canonical generator order") {
  const MonomialIdeal I(4, {{0, 0, 1, 1}, {0, 0, 2, 0}, {0, 1, 0, 0}});
  CHECK(I.gens() == std::vector<Monomial>{{0, 1, 0, 0}, {0, 0, 2, 0}, {0, 0, 1, 1}});
}

TEST_CASE("monomial strings") {
  const std::vector<std::string> v{"x0", "x1", "y0", "y1"};
  CHECK(monomial_string(Monomial{3, 0, 0, 1}, v) == "x0^3*y1");
  CHECK(monomial_string(Monomial{0, 0, 0, 0}, v) == "1");
}

TEST_CASE("unit and zero ideals") {
  CHECK(MonomialIdeal::unit(3).is_unit());
  CHECK(MonomialIdeal::unit(3).contains(Monomial{4, 0, 1}));
  CHECK_FALSE(MonomialIdeal::zero(3).contains(Monomial{0, 0, 0}));
  CHECK_THROWS_AS(MonomialIdeal(2, {{1, -1}}), InputError);
  CHECK_THROWS_AS(MonomialIdeal(2, {{1, 1, 1}}), InputError);
}

TEST_CASE("colon by a variable") {
  CHECK(colon_var_saturate(MonomialIdeal(3, {{1, 1, 0}, {2, 0, 1}}), 0).gens() ==
        std::vector<Monomial>{{0, 1, 0}, {0, 0, 1}});
  CHECK(colon_var_saturate(MonomialIdeal(3, {{0, 2, 0}}), 0).gens() == std::vector<Monomial>{{0, 2, 0}});

  std::mt19937_64 rng(2);
  const auto window = box_monomials(3, 5);
  for (int trial = 0; trial < 50; ++trial) {
    const MonomialIdeal I = random_ideal(rng, 3, 4, 4);
    const MonomialIdeal c = colon_var_saturate(I, 0);
    for (const auto& m : window) {
      Monomial big = m;
      big.exps[0] += 10;
      CHECK(c.contains(m) == I.contains(big));
    }
  }
}

TEST_CASE("intersection") {
  CHECK(ideal_intersect(MonomialIdeal(2, {{1, 0}}), MonomialIdeal(2, {{0, 1}})).gens() == std::vector<Monomial>{{1, 1}});
  const MonomialIdeal m(2, {{1, 0}, {0, 1}});
  CHECK(ideal_intersect(m, m) == m);

  std::mt19937_64 rng(3);
  const auto window = box_monomials(3, 6);
  for (int trial = 0; trial < 50; ++trial) {
    const MonomialIdeal a = random_ideal(rng, 3, 5, 5);
    const MonomialIdeal b = random_ideal(rng, 3, 5, 5);
    const MonomialIdeal c = random_ideal(rng, 3, 5, 5);
    const MonomialIdeal ab = ideal_intersect(a, b);
    for (const auto& x : window) CHECK(ab.contains(x) == (a.contains(x) && b.contains(x)));
    CHECK(ab == ideal_intersect(b, a));
    CHECK(ideal_intersect(ab, c) == ideal_intersect(a, ideal_intersect(b, c)));
    CHECK(ideal_intersect(a, a) == a);
  }
}

TEST_CASE("saturation oracle") {
  const Fan p2 = catalog_fan("P2");
  const MonomialIdeal nonsat(3, {{3, 1, 0}, {1, 1, 2}, {0, 0, 3}, {0, 3, 0}});
  const MonomialIdeal sat = saturate_oracle(nonsat, p2);
  CHECK(sat.contains(Monomial{0, 1, 0}));
  CHECK_FALSE(nonsat.contains(Monomial{0, 1, 0}));
  CHECK(sat == MonomialIdeal(3, {{0, 1, 0}, {0, 0, 3}}));

  const MonomialIdeal ex1(3, {{0, 0, 2}, {1, 0, 1}, {1, 1, 0}});
  CHECK(saturate_oracle(ex1, p2) == ex1);
  CHECK(saturate_oracle(MonomialIdeal::unit(3), p2) == MonomialIdeal::unit(3));

  const Fan h3 = catalog_fan("H3");
  CHECK(saturate_oracle(MonomialIdeal(4, {{0, 1, 0, 0}, {3, 0, 0, 1}}), h3) == MonomialIdeal(4, {{0, 1, 0, 0}, {0, 0, 0, 1}}));
}

TEST_CASE("saturation is idempotent and contains I") {
  std::mt19937_64 rng(4);
  for (const char* name : {"P2", "P3", "H3", "P1xP1"}) {
    const Fan f = catalog_fan(name);
    for (int trial = 0; trial < 40; ++trial) {
      const MonomialIdeal I = random_ideal(rng, f.num_rays());
      const MonomialIdeal s = saturate_oracle(I, f);
      CHECK(saturate_oracle(s, f) == s);
      for (const auto& g : I.gens()) CHECK(s.contains(g));
    }
  }
}

TEST_CASE("monomials of a degree") {
  const CoxGrading p2 = compute_grading(catalog_fan("P2"));
  CHECK(monomials_of_degree(p2, ClassDegree{2}).size() == 6);
  CHECK(monomials_of_degree(p2, ClassDegree{-1}).empty());
  CHECK(monomials_of_degree(compute_grading(catalog_fan("P3")), ClassDegree{1}).size() == 4);

  const CoxGrading h3 = compute_grading(catalog_fan("H3"));
  const auto m = monomials_of_degree(h3, ClassDegree{0, 1});
  const std::set<Monomial> got(m.begin(), m.end());
  const std::set<Monomial> expected{{0, 0, 1, 0}, {3, 0, 0, 1}, {2, 1, 0, 1}, {1, 2, 0, 1}, {0, 3, 0, 1}};
  CHECK(got == expected);
}

TEST_CASE("monomials of a degree match a bounded scan") {
  for (const char* name : {"P2", "H3", "P1xP1", "H1"}) {
    const CoxGrading g = compute_grading(catalog_fan(name));
    const auto window = box_monomials(g.r, 12);
    std::map<ClassDegree, std::set<Monomial>> scan;
    for (const auto& k : window) scan[g.degree(k)].insert(k);
    // Degrees whose monomials all fit in the box.
    const std::vector<ClassDegree> degrees = g.ell == 1 ? std::vector<ClassDegree>{{0}, {1}, {3}, {5}}
                                                        : std::vector<ClassDegree>{{0, 0}, {1, 0}, {0, 1}, {2, 1}, {-1, 2}, {3, 3}};
    for (const auto& a : degrees) {
      CAPTURE(name);
      CAPTURE(a.coords);
      const auto m = monomials_of_degree(g, a);
      CHECK(std::set<Monomial>(m.begin(), m.end()) == scan[a]);
    }
  }
}

TEST_CASE("infinite fibres are rejected") {
  CoxGrading g;
  g.r = 2;
  g.ell = 1;
  g.deg_matrix = {{1, 0}};
  g.basis_rays = {0};
  CHECK_THROWS_WITH(monomials_of_degree(g, ClassDegree{1}), "grading not pointed for this fan");
}

TEST_CASE("hilbert oracle") {
  const CoxGrading p2 = compute_grading(catalog_fan("P2"));
  const MonomialIdeal ex1(3, {{0, 0, 2}, {1, 0, 1}, {1, 1, 0}});
  const Int expected[] = {1, 3, 3, 3};
  for (Int t = 0; t <= 3; ++t) CHECK(hilbert_oracle(ex1, p2, ClassDegree{t}) == expected[t]);
  CHECK(hilbert_oracle(MonomialIdeal::unit(3), p2, ClassDegree{4}) == 0);
  CHECK(hilbert_oracle(MonomialIdeal::zero(3), p2, ClassDegree{4}) == 15);
}

TEST_CASE("saturation only changes finitely many Hilbert values") {
  const Fan f = catalog_fan("P2");
  const CoxGrading g = compute_grading(f);
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    const MonomialIdeal I = random_ideal(rng, 3);
    const MonomialIdeal s = saturate_oracle(I, f);
    for (Int t = 0; t <= 20; ++t) CHECK(hilbert_oracle(I, g, ClassDegree{t}) >= hilbert_oracle(s, g, ClassDegree{t}));
    // Beyond the sum of generator degrees I and I^sat agree on P2.
    Int top = 0;
    for (const auto& gen : I.gens()) top += gen.total_degree();
    CHECK(hilbert_oracle(I, g, ClassDegree{top + 1}) == hilbert_oracle(s, g, ClassDegree{top + 1}));
  }
}
