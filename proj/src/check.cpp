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

#include "klyachko/check.hpp"

#include "klyachko/hilbert.hpp"
#include "klyachko/reconstruction.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>

namespace klyachko {

namespace {

std::string ideal_string(const MonomialIdeal& I, const Fan& fan) {
  std::string out = "(";
  for (std::size_t i = 0; i < I.gens().size(); ++i) out += (i ? ", " : "") + monomial_string(I.gens()[i], fan.variables());
  return out + ")";
}

// Calls f on every p in [-w, w]^k until it returns false.
void for_each_in_window(std::size_t k, Int w, const std::function<bool(const IntVec&)>& f) {
  IntVec p(k, -w);
  while (true) {
    if (!f(p)) return;
    std::size_t i = 0;
    while (i < k && p[i] == w) {
      p[i] = -w;
      ++i;
    }
    if (i == k) return;
    ++p[i];
  }
}

bool generated_orthants_contain(const MonomialIdeal& I, const Cone& cone, const IntVec& p) {
  for (const auto& g : I.gens()) {
    bool in = true;
    for (std::size_t i = 0; i < cone.size() && in; ++i) in = p[i] >= g[cone[i]];
    if (in) return true;
  }
  return false;
}

bool member_pairings(const DiagramEntry& e, const IntVec& p) {
  return e.C.contains_pairings(p) && !e.delta.contains_pairings(p);
}

PropertyResult compare_diagrams(const std::string& name, const KlyachkoDiagram& a, const KlyachkoDiagram& b,
                                const Fan& fan, Int w) {
  PropertyResult r{name};
  for (std::size_t i = 0; i < fan.cones().size() && r.passed; ++i) {
    const Cone& cone = fan.cones()[i];
    if (cone.empty()) continue;
    for_each_in_window(cone.size(), w, [&](const IntVec& p) {
      if (member_pairings(a.entries[i], p) == member_pairings(b.entries[i], p)) return true;
      r.passed = false;
      r.witness = "cone " + to_string(IntVec(cone.begin(), cone.end())) + ", pairings " + to_string(p);
      return false;
    });
  }
  return r;
}

}  // namespace

Int membership_window(const MonomialIdeal& ideal, const std::optional<Int>& explicit_window) {
  if (explicit_window) return *explicit_window;
  if (const char* env = std::getenv("KLYACHKO_WINDOW")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0) return static_cast<Int>(v);
  }
  Int e = 0;
  for (const auto& g : ideal.gens())
    for (Int x : g.exps) e = std::max(e, x);
  return 2 + e;
}

std::vector<ClassDegree> hilbert_window(const CoxGrading& grading, const MonomialIdeal& ideal) {
  IntVec bound(grading.r, 0);
  for (const auto& g : ideal.gens())
    for (std::size_t i = 0; i < bound.size(); ++i) bound[i] = std::max(bound[i], g[i]);
  for (auto& b : bound) b += 1;
  const auto degrees = degrees_below(grading, bound);
  IntVec lo = degrees.front().coords, hi = lo;
  for (const auto& d : degrees)
    for (std::size_t k = 0; k < lo.size(); ++k) {
      lo[k] = std::min(lo[k], d[k]);
      hi[k] = std::max(hi[k], d[k]);
    }
  for (auto& v : lo) v -= 1;
  std::vector<ClassDegree> out;
  IntVec u = lo;
  while (true) {
    out.emplace_back(u);
    std::size_t k = 0;
    while (k < u.size() && u[k] == hi[k]) {
      u[k] = lo[k];
      ++k;
    }
    if (k == u.size()) break;
    ++u[k];
  }
  return out;
}

std::vector<PropertyResult> check_ideal(const ToricVariety& X, const MonomialIdeal& ideal, const CheckOptions& options) {
  return check_ideal(X, ideal, compute_diagram(ideal, X.fan()), options);
}

std::vector<PropertyResult> check_ideal(const ToricVariety& X, const MonomialIdeal& ideal, const KlyachkoDiagram& diag,
                                        const CheckOptions& options) {
  const Fan& fan = X.fan();
  const CoxGrading& grading = X.grading();
  const Int w = membership_window(ideal, options.window);
  const MonomialIdeal sat = saturate_oracle(ideal, fan);
  std::vector<PropertyResult> out;

  {
    PropertyResult r{"membership identity"};
    for (std::size_t i = 0; i < fan.cones().size() && r.passed; ++i) {
      const Cone& cone = fan.cones()[i];
      if (cone.empty()) continue;
      for_each_in_window(cone.size(), w, [&](const IntVec& p) {
        const bool direct = generated_orthants_contain(ideal, cone, p);
        if (direct == member_pairings(diag.entries[i], p)) return true;
        r.passed = false;
        r.witness = "cone " + to_string(IntVec(cone.begin(), cone.end())) + ", pairings " + to_string(p) +
                    (direct ? ": in some generator orthant but not in C minus Delta"
                            : ": in C minus Delta but in no generator orthant");
        return false;
      });
    }
    out.push_back(r);
  }

  {
    PropertyResult r{"saturation roundtrip"};
    try {
      const MonomialIdeal rec = reconstruct_generators(X, diag).ideal;
      if (rec != sat) {
        r.passed = false;
        r.witness = "reconstructed " + ideal_string(rec, fan) + ", oracle " + ideal_string(sat, fan);
      }
    } catch (const std::exception& e) {
      r.passed = false;
      r.witness = e.what();
    }
    out.push_back(r);
  }

  const auto degrees = hilbert_window(grading, ideal);
  {
    PropertyResult r{"hilbert agreement"};
    for (const auto& a : degrees) {
      const Int oracle = hilbert_oracle(sat, grading, a);
      const Int from_diagram = hilbert_value(X, diag, a);
      const Int general = hilbert_value_general(X, ideal, a);
      if (oracle != from_diagram || oracle != general) {
        r.passed = false;
        r.witness = "degree " + to_string(a.coords) + ": oracle " + std::to_string(oracle) + ", diagram " +
                    std::to_string(from_diagram) + ", general " + std::to_string(general);
        break;
      }
    }
    out.push_back(r);
  }

  out.push_back(compare_diagrams("saturation invariance", diag, compute_diagram(sat, fan), fan, w));
  out.push_back(compare_diagrams("tie-order independence", diag, compute_diagram(ideal, fan, TieOrder::kReversed), fan, w));

  {
    PropertyResult r{"h1 consistency"};
    bool any_nonzero = false;
    for (const auto& a : degrees) {
      const Divisor d = grading.canonical_lift(a);
      const auto monos = monomials_of_degree(grading, a);
      const auto sat_count = static_cast<std::size_t>(std::count_if(monos.begin(), monos.end(), [&](const Monomial& m) { return sat.contains(m); }));
      const auto i_count = static_cast<std::size_t>(std::count_if(monos.begin(), monos.end(), [&](const Monomial& m) { return ideal.contains(m); }));
      const std::size_t basis = graded_basis(X, diag, d).basis.size();
      const std::size_t h1 = local_cohomology_h1(X, ideal, diag, d).basis.size();
      if (basis != sat_count || basis != i_count + h1) {
        r.passed = false;
        r.witness = "degree " + to_string(a.coords) + ": |I^sat| oracle " + std::to_string(sat_count) + ", diagram " +
                    std::to_string(basis) + ", |I| " + std::to_string(i_count) + ", h1 " + std::to_string(h1);
        break;
      }
      any_nonzero = any_nonzero || h1 > 0;
    }
    if (r.passed && any_nonzero && sat == ideal) {
      r.passed = false;
      r.witness = "nonzero H^1 for a saturated ideal";
    }
    out.push_back(r);
  }
  return out;
}

MonomialIdeal random_ideal(std::mt19937_64& rng, std::size_t nvars, Int max_exp, std::size_t max_gens) {
  std::uniform_int_distribution<std::size_t> count(1, max_gens);
  std::uniform_int_distribution<Int> expo(0, max_exp);
  std::vector<Monomial> gens(count(rng));
  for (auto& g : gens) {
    g.exps.resize(nvars);
    for (auto& e : g.exps) e = expo(rng);
  }
  return MonomialIdeal(nvars, std::move(gens));
}

}  // namespace klyachko
