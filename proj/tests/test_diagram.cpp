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
#include "klyachko/monomial.hpp"

#include <random>
#include <set>

using namespace klyachko;

namespace {

// Localized membership: some generator divides x^{phi(m)} after inverting the
// variables outside the cone.
bool oracle_member(const MonomialIdeal& I, const Fan& fan, const Cone& cone, const Character& m) {
  for (const auto& g : I.gens()) {
    bool ok = true;
    for (int r : cone) ok = ok && g[r] <= dot(m.coords, fan.ray(r));
    if (ok) return true;
  }
  return false;
}

std::vector<Character> window(std::size_t dim, Int w) {
  std::vector<Character> out;
  IntVec p(dim, -w);
  while (true) {
    out.emplace_back(p);
    std::size_t i = 0;
    while (i < dim && p[i] == w) p[i++] = -w;
    if (i == dim) break;
    ++p[i];
  }
  return out;
}

std::set<Character> points(const DiagramEntry& e) {
  const auto v = e.delta.enumerate();
  return {v.begin(), v.end()};
}

void check_membership(const MonomialIdeal& I, const Fan& fan, const KlyachkoDiagram& d, Int w) {
  for (const auto& cone : fan.cones())
    for (const auto& m : window(fan.dim(), w)) {
      CAPTURE(cone);
      CAPTURE(m.coords);
      CHECK(filtration_member(d, cone, m) == oracle_member(I, fan, cone, m));
    }
}

}  // namespace

TEST_CASE("P2 worked example") {
  const Fan f = catalog_fan("P2");
  const MonomialIdeal I(3, {{0, 0, 2}, {1, 0, 1}, {1, 1, 0}});
  const KlyachkoDiagram d = compute_diagram(I, f);
  CHECK(d.s == IntVec{0, 0, 0});
  CHECK(points(d.at({1, 2})) == std::set<Character>{{0, 0}});
  CHECK(points(d.at({0, 2})) == std::set<Character>{{0, 0}, {-1, 1}});
  CHECK(d.at({0, 1}).delta.is_empty());
  CHECK(d.entries.size() == f.cones().size());
  check_membership(I, f, d, 4);
}

TEST_CASE("sum of two ideals on P2") {
  const Fan f = catalog_fan("P2");
  const MonomialIdeal I(3, {{0, 2, 4}, {0, 3, 1}, {0, 5, 0}});
  const MonomialIdeal J(3, {{0, 0, 4}, {0, 1, 3}, {0, 4, 2}});
  const KlyachkoDiagram dI = compute_diagram(I, f), dJ = compute_diagram(J, f);
  CHECK(dI.s == IntVec{0, 2, 0});
  CHECK(dJ.s == IntVec{0, 0, 2});
  CHECK(points(dI.at({1, 2})) == std::set<Character>{{2, 0}, {2, 1}, {2, 2}, {2, 3}, {3, 0}, {4, 0}});
  CHECK(points(dJ.at({1, 2})) == std::set<Character>{{0, 2}, {0, 3}, {1, 2}, {2, 2}, {3, 2}});
  const KlyachkoDiagram sum = sum_diagram(dI, dJ);
  CHECK(sum.s == IntVec{0, 0, 0});
  CHECK(points(sum.at({1, 2})) == std::set<Character>{{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 0}, {1, 1},
                                                       {1, 2}, {2, 0}, {2, 1}, {2, 2}, {3, 0}, {4, 0}});
  CHECK(sum.at({0, 2}).delta.is_empty());
  CHECK(sum.at({0, 1}).delta.is_empty());
  const KlyachkoDiagram direct = compute_diagram(ideal_sum(I, J), f);
  for (const auto& cone : f.cones())
    for (const auto& m : window(2, 7)) CHECK(filtration_member(sum, cone, m) == filtration_member(direct, cone, m));
}

TEST_CASE("P3 example matches the set formulas") {
  const Fan f = catalog_fan("P3");
  const MonomialIdeal I(4, {{1, 1, 0, 0}, {0, 0, 2, 0}, {0, 1, 1, 2}});
  const KlyachkoDiagram d = compute_diagram(I, f);
  CHECK(d.s == IntVec{0, 0, 0, 0});
  auto s0 = [](Int d1, Int d2, Int d3) { return d1 == 0 && 0 <= d2 && d2 <= 1 && d3 >= 0; };
  auto s1 = [](Int d1, Int d2, Int d3) {
    return (d1 == -d2 - d3 && 0 <= d2 && d2 <= 1 && 0 <= d3 && d3 <= 1) || (d1 == -d3 && d2 == 0 && d3 >= 2);
  };
  auto s3 = [](Int d1, Int d2, Int d3) {
    return (d1 == 0 && 0 <= d2 && d2 <= 1 && d3 <= -d2) || (d2 == 0 && d1 >= 0 && d3 == -d1);
  };
  for (const auto& m : window(3, 6)) {
    CAPTURE(m.coords);
    CHECK(d.at({1, 2, 3}).delta.contains(m) == s0(m[0], m[1], m[2]));
    CHECK(d.at({0, 2, 3}).delta.contains(m) == s1(m[0], m[1], m[2]));
    CHECK(d.at({0, 1, 2}).delta.contains(m) == s3(m[0], m[1], m[2]));
  }
  CHECK(d.at({0, 1, 3}).delta.is_empty());
  CHECK_FALSE(d.at({1, 2, 3}).delta.is_finite());
  CHECK_FALSE(d.at({0, 2, 3}).delta.is_finite());
  CHECK_FALSE(d.at({0, 1, 2}).delta.is_finite());
  check_membership(I, f, d, 3);
}

TEST_CASE("H3 example") {
  const Fan f = catalog_fan("H3");
  const MonomialIdeal I(4, {{0, 1, 0, 0}, {3, 0, 0, 1}});
  const KlyachkoDiagram d = compute_diagram(I, f);
  CHECK(points(d.at({1, 3})) == std::set<Character>{{0, 0}});
  for (const Cone& c : std::vector<Cone>{{1, 2}, {0, 3}, {0, 2}}) CHECK(d.at(c).delta.is_empty());
  check_membership(I, f, d, 5);
}

TEST_CASE("principal ideals have empty regions") {
  for (const char* name : {"P2", "H3", "P1xP1"}) {
    const Fan f = catalog_fan(name);
    const Monomial g(IntVec(f.num_rays(), 2));
    const MonomialIdeal I(f.num_rays(), {g});
    const KlyachkoDiagram d = compute_diagram(I, f);
    CHECK(d.s == g.exps);
    for (const auto& e : d.entries) CHECK(e.delta.is_empty());
  }
}

TEST_CASE("zero cone") {
  const Fan f = catalog_fan("P2");
  const KlyachkoDiagram d = compute_diagram(MonomialIdeal(3, {{1, 1, 0}}), f);
  CHECK(d.at({}).delta.is_empty());
  CHECK(filtration_member(d, {}, Character{9, -9}));
}

TEST_CASE("random ideals: membership, ties and sums") {
  std::mt19937_64 rng(21);
  for (const char* name : {"P2", "H3", "P1xP1", "P3"}) {
    const Fan f = catalog_fan(name);
    const int trials = f.dim() == 3 ? 8 : 25;
    for (int t = 0; t < trials; ++t) {
      const MonomialIdeal I = random_ideal(rng, f.num_rays(), 4, 4);
      const MonomialIdeal J = random_ideal(rng, f.num_rays(), 4, 4);
      const KlyachkoDiagram dI = compute_diagram(I, f);
      const KlyachkoDiagram rev = compute_diagram(I, f, TieOrder::kReversed);
      const KlyachkoDiagram sum = sum_diagram(dI, compute_diagram(J, f));
      const MonomialIdeal IJ = ideal_sum(I, J);
      const Int w = f.dim() == 3 ? 3 : 5;
      for (const auto& cone : f.cones())
        for (const auto& m : window(f.dim(), w)) {
          const bool member = oracle_member(I, f, cone, m);
          CHECK(filtration_member(dI, cone, m) == member);
          CHECK(filtration_member(rev, cone, m) == member);
          CHECK(filtration_member(sum, cone, m) == oracle_member(IJ, f, cone, m));
        }
    }
  }
}

TEST_CASE("sum across fans is rejected") {
  const MonomialIdeal I(3, {{1, 0, 0}});
  const KlyachkoDiagram a = compute_diagram(I, catalog_fan("P2"));
  const KlyachkoDiagram b = compute_diagram(MonomialIdeal(4, {{1, 0, 0, 0}}), catalog_fan("P3"));
  CHECK_THROWS_AS(sum_diagram(a, b), FanMismatch);
}

TEST_CASE("shifted diagram") {
  const Fan f = catalog_fan("P2");
  const KlyachkoDiagram d = compute_diagram(MonomialIdeal(3, {{0, 0, 2}, {1, 0, 1}, {1, 1, 0}}), f);
  const auto shifted = shift_diagram(d, f, Divisor{5, 0, 0});
  for (const auto& e : shifted)
    if (e.cone == Cone{0, 2}) {
      const auto v = e.delta.enumerate();
      CHECK(std::set<Character>(v.begin(), v.end()) == std::set<Character>{{4, 1}, {5, 0}});
    }
  CHECK(maximal_entries(d, f).size() == 3);
}
