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
#include "klyachko/diagram.hpp"
#include "klyachko/errors.hpp"
#include "klyachko/json_io.hpp"
#include "klyachko/monomial.hpp"
#include "klyachko/reconstruction.hpp"

#include <random>
#include <set>

#ifndef KLYACHKO_TEST_DATA
#define KLYACHKO_TEST_DATA "tests/data"
#endif

using namespace klyachko;

namespace {

KlyachkoDiagram load_diagram(const std::string& file, const Fan& fan) {
  return io::diagram_from_json(io::read_file(std::string(KLYACHKO_TEST_DATA) + "/" + file), fan);
}

}  // namespace

TEST_CASE("character and monomial conversions") {
  const Fan f = catalog_fan("P2");
  const Divisor d{2, 0, 0};
  const Monomial k = character_to_monomial(f, Character{-1, 1}, d);
  CHECK(k == Monomial{2, -1, 1});
  CHECK(monomial_to_character(f, Monomial{1, 0, 1}, d) == Character{0, 1});
}

TEST_CASE("reconstruction of the P2 diagram") {
  const ToricVariety X = ToricVariety::create(catalog_fan("P2"));
  const auto r = reconstruct_generators(X, load_diagram("p2_diag1.json", X.fan()));
  CHECK(r.ideal == MonomialIdeal(3, {{1, 0, 1}, {0, 1, 1}, {1, 2, 0}}));
  CHECK(r.ideal.gens() == std::vector<Monomial>{{1, 0, 1}, {0, 1, 1}, {1, 2, 0}});
}

TEST_CASE("reconstruction of the P3 diagram") {
  const ToricVariety X = ToricVariety::create(catalog_fan("P3"));
  const auto r = reconstruct_generators(X, load_diagram("p3_diag2.json", X.fan()));
  CHECK(r.ideal == MonomialIdeal(4, {{0, 1, 0, 0}, {0, 0, 2, 0}, {0, 0, 1, 1}}));
}

TEST_CASE("H3 reconstruction") {
  const ToricVariety X = ToricVariety::create(catalog_fan("H3"));
  const MonomialIdeal I(4, {{0, 1, 0, 0}, {3, 0, 0, 1}});
  const KlyachkoDiagram d = compute_diagram(I, X.fan());
  // y1 = x^{(0,0,0,1)} has degree (-3,1) and lies in the saturation.
  const auto full = reconstruct_generators(X, d);
  CHECK(full.ideal == saturate_oracle(I, X.fan()));
  CHECK(full.ideal == MonomialIdeal(4, {{0, 1, 0, 0}, {0, 0, 0, 1}}));

  // Restricted to nonnegative degrees, the search finds the listed generators.
  const auto boxed = reconstruct_generators(X, d, SearchBox{{{0, 2}, {0, 2}}});
  const std::set<Monomial> pre(boxed.pre_minimal.begin(), boxed.pre_minimal.end());
  CHECK(pre == std::set<Monomial>{{0, 1, 0, 0}, {3, 0, 0, 1}, {2, 1, 0, 1}, {1, 2, 0, 1}, {0, 3, 0, 1}});
  CHECK(boxed.ideal == I);
}

TEST_CASE("search box too small") {
  const ToricVariety X = ToricVariety::create(catalog_fan("P2"));
  const MonomialIdeal I(3, {{0, 0, 2}, {1, 0, 1}, {1, 1, 0}});
  const KlyachkoDiagram d = compute_diagram(I, X.fan());
  // All generators sit in degree 2, the upper face of [0,2].
  CHECK_THROWS_AS(reconstruct_generators(X, d, SearchBox{{{0, 2}}}), SearchBoxTooSmall);
  CHECK(reconstruct_generators(X, d, SearchBox{{{0, 3}}}).ideal == I);
}

TEST_CASE("graded basis") {
  const ToricVariety X = ToricVariety::create(catalog_fan("P2"));
  const MonomialIdeal I(3, {{0, 0, 2}, {1, 0, 1}, {1, 1, 0}});
  const KlyachkoDiagram d = compute_diagram(I, X.fan());
  for (Int t = 0; t <= 5; ++t) {
    const GradedPiece p = graded_basis(X, d, Divisor{t, 0, 0});
    std::set<Monomial> expected;
    for (const auto& k : monomials_of_degree(X.grading(), ClassDegree{t}))
      if (I.contains(k)) expected.insert(k);
    const auto got = p.monomials(X.fan());
    CHECK(std::set<Monomial>(got.begin(), got.end()) == expected);
  }
}

TEST_CASE("span sets") {
  const ToricVariety X = ToricVariety::create(catalog_fan("P2"));
  // x0*x2 in degree 2 spans x0*x2*{x0,x1,x2} in degree 3.
  const Divisor d{2, 0, 0};
  const Character m = monomial_to_character(X.fan(), Monomial{1, 0, 1}, d);
  const SpanSet s = span_set(X, {{m, d}}, Divisor{3, 0, 0});
  CHECK(s.degree == ClassDegree{3});
  std::set<Monomial> got;
  for (const auto& c : s.covered) got.insert(character_to_monomial(X.fan(), c, Divisor{3, 0, 0}));
  CHECK(got == std::set<Monomial>{{2, 0, 1}, {1, 1, 1}, {1, 0, 2}});
  CHECK(span_set(X, {{m, d}}, Divisor{1, 0, 0}).covered.empty());
}

TEST_CASE("local cohomology of the non-saturated P2 ideal") {
  const ToricVariety X = ToricVariety::create(catalog_fan("P2"));
  const MonomialIdeal I(3, {{3, 1, 0}, {1, 1, 2}, {0, 0, 3}, {0, 3, 0}});
  const KlyachkoDiagram d = compute_diagram(I, X.fan());
  const Int expected[] = {0, 1, 3, 5, 4, 1, 0};
  for (Int t = 0; t <= 6; ++t) {
    CAPTURE(t);
    CHECK(static_cast<Int>(local_cohomology_h1(X, I, d, Divisor{t, 0, 0}).basis.size()) == expected[t]);
  }
  const auto two = local_cohomology_h1(X, I, d, Divisor{2, 0, 0}).monomials(X.fan());
  CHECK(std::set<Monomial>(two.begin(), two.end()) == std::set<Monomial>{{1, 1, 0}, {0, 2, 0}, {0, 1, 1}});
  Int total = 0;
  for (const auto& p : local_cohomology_h1_scan(X, I, d)) total += static_cast<Int>(p.basis.size());
  CHECK(total == 14);
}

TEST_CASE("local cohomology equals the saturation quotient") {
  std::mt19937_64 rng(31);
  for (const char* name : {"P2", "H3", "P1xP1"}) {
    const ToricVariety X = ToricVariety::create(catalog_fan(name));
    for (int t = 0; t < 20; ++t) {
      const MonomialIdeal I = random_ideal(rng, X.num_rays(), 4, 4);
      const MonomialIdeal S = saturate_oracle(I, X.fan());
      const KlyachkoDiagram d = compute_diagram(I, X.fan());
      for (const auto& a : degrees_below(X.grading(), IntVec(X.num_rays(), 3))) {
        const auto h1 = local_cohomology_h1(X, I, d, X.grading().canonical_lift(a)).monomials(X.fan());
        std::set<Monomial> expected;
        for (const auto& k : monomials_of_degree(X.grading(), a))
          if (S.contains(k) && !I.contains(k)) expected.insert(k);
        CHECK(std::set<Monomial>(h1.begin(), h1.end()) == expected);
      }
    }
  }
}

TEST_CASE("reconstruction recovers the saturation") {
  std::mt19937_64 rng(32);
  for (const char* name : {"P2", "H3", "P1xP1", "H1"}) {
    const ToricVariety X = ToricVariety::create(catalog_fan(name));
    for (int t = 0; t < 20; ++t) {
      const MonomialIdeal I = random_ideal(rng, X.num_rays());
      CHECK(reconstruct_generators(X, compute_diagram(I, X.fan())).ideal == saturate_oracle(I, X.fan()));
    }
  }
}

TEST_CASE("degree order") {
  CHECK(degree_order_less(ClassDegree{1, 0}, ClassDegree{0, 2}));
  CHECK(degree_order_less(ClassDegree{0, 1}, ClassDegree{1, 0}));
  const CoxGrading g = compute_grading(catalog_fan("P2"));
  CHECK(degrees_below(g, {1, 1, 1}) == std::vector<ClassDegree>{{0}, {1}, {2}, {3}});
}

TEST_CASE("degreewise exactness and vanishing of local cohomology") {
  std::mt19937_64 rng(33);
  for (const char* name : {"P2", "H3"}) {
    const ToricVariety X = ToricVariety::create(catalog_fan(name));
    for (int t = 0; t < 15; ++t) {
      const MonomialIdeal I = random_ideal(rng, X.num_rays(), 4, 4);
      const KlyachkoDiagram d = compute_diagram(I, X.fan());
      bool all_zero = true;
      for (const auto& a : degrees_below(X.grading(), IntVec(X.num_rays(), 3))) {
        const Divisor lift = X.grading().canonical_lift(a);
        Int in_ideal = 0;
        for (const auto& k : monomials_of_degree(X.grading(), a)) in_ideal += I.contains(k);
        const Int h1 = static_cast<Int>(local_cohomology_h1(X, I, d, lift).basis.size());
        CHECK(static_cast<Int>(graded_basis(X, d, lift).basis.size()) == in_ideal + h1);
        all_zero = all_zero && h1 == 0;
      }
      if (saturate_oracle(I, X.fan()) == I) CHECK(all_zero);
      else CHECK_FALSE(local_cohomology_h1_scan(X, I, d).empty());
    }
  }
}

TEST_CASE("spans of saturated elements stay in the graded basis") {
  const ToricVariety X = ToricVariety::create(catalog_fan("H3"));
  const MonomialIdeal I(4, {{0, 1, 0, 0}, {3, 0, 0, 1}});
  const KlyachkoDiagram d = compute_diagram(I, X.fan());
  const Divisor from{1, 0, 0, 0};
  std::vector<SpanGenerator> gens;
  for (const auto& m : graded_basis(X, d, from).basis) gens.push_back({m, from});
  for (const Divisor& e : {Divisor{2, 0, 1, 0}, Divisor{3, 1, 0, 0}, Divisor{0, 0, 2, 0}}) {
    const SpanSet s = span_set(X, gens, e);
    const auto basis = graded_basis(X, d, e).basis;
    const std::set<Character> b(basis.begin(), basis.end());
    for (const auto& c : s.covered) CHECK(b.count(c) == 1);
  }
}
