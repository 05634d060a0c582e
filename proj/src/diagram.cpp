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

#include "klyachko/diagram.hpp"

#include "klyachko/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace klyachko {

namespace {

using Cells = std::vector<std::vector<Interval>>;

class DeltaBuilder {
 public:
  DeltaBuilder(const std::vector<Monomial>& gens, const IntVec& s, TieOrder ties) : gens_(gens), s_(s), ties_(ties) {}

  // Cells over the first c rays of `cone` for the generator subset.
  const Cells& build(const Cone& cone, std::size_t c, std::vector<std::size_t> subset) {
    std::sort(subset.begin(), subset.end());
    auto key = std::make_pair(Cone(cone.begin(), cone.begin() + static_cast<long>(c)), subset);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    Cells out;
    if (subset.empty()) {
      std::vector<Interval> box;
      for (std::size_t p = 0; p < c; ++p) box.push_back(Interval::at_least(s_[cone[p]]));
      out.push_back(std::move(box));
    } else if (c > 0) {
      const int ray = cone[c - 1];
      std::vector<std::size_t> order = subset;
      if (ties_ == TieOrder::kReversed) std::reverse(order.begin(), order.end());
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t a, std::size_t b) { return gens_[a][ray] < gens_[b][ray]; });
      const Int first = gens_[order.front()][ray];
      if (c == 1) {
        out.push_back({Interval::half_open(s_[ray], first)});
      } else {
        for (std::size_t j = 0; j <= order.size(); ++j) {
          const Int lo = j == 0 ? s_[ray] : gens_[order[j - 1]][ray];
          const Int end = j == order.size() ? kPosInf : gens_[order[j]][ray];
          const Interval band = Interval::half_open(lo, end);
          if (band.empty()) continue;
          std::vector<std::size_t> prefix(order.begin(), order.begin() + static_cast<long>(j));
          for (const auto& cell : build(cone, c - 1, prefix)) {
            auto ext = cell;
            ext.push_back(band);
            out.push_back(std::move(ext));
          }
        }
      }
    }
    return memo_.emplace(std::move(key), std::move(out)).first->second;
  }

 private:
  const std::vector<Monomial>& gens_;
  const IntVec& s_;
  TieOrder ties_;
  std::map<std::pair<Cone, std::vector<std::size_t>>, Cells> memo_;
};

LatticeRegion to_region(std::shared_ptr<const ConeFrame> frame, const Cells& cells) {
  std::vector<Cell> out;
  for (const auto& b : cells) out.push_back(Cell{b});
  return LatticeRegion(std::move(frame), std::move(out));
}

IntVec restrict(const IntVec& v, const Cone& cone) {
  IntVec out;
  for (int i : cone) out.push_back(v[i]);
  return out;
}

}  // namespace

const DiagramEntry& KlyachkoDiagram::at(const Cone& cone) const {
  Cone sorted = cone;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& e : entries)
    if (e.cone == sorted) return e;
  throw InputError("diagram has no entry for cone " + to_string(IntVec(sorted.begin(), sorted.end())));
}

KlyachkoDiagram compute_diagram(const MonomialIdeal& ideal, const Fan& fan, TieOrder ties) {
  if (ideal.is_zero()) throw InputError("the zero ideal has no Klyachko diagram");
  if (ideal.nvars() != fan.num_rays()) throw InputError("ideal and fan have different numbers of variables");
  KlyachkoDiagram diag;
  diag.s = min_exponents(ideal);
  std::vector<std::size_t> all(ideal.gens().size());
  std::iota(all.begin(), all.end(), 0);
  DeltaBuilder builder(ideal.gens(), diag.s, ties);
  for (std::size_t i = 0; i < fan.cones().size(); ++i) {
    const Cone& cone = fan.cones()[i];
    auto frame = fan.frame(i);
    LatticeRegion C = LatticeRegion::orthant(frame, restrict(diag.s, cone));
    LatticeRegion delta = cone.empty() ? LatticeRegion::empty(frame) : to_region(frame, builder.build(cone, cone.size(), all));
    diag.entries.push_back({cone, std::move(C), std::move(delta)});
  }
  return diag;
}

bool filtration_member(const KlyachkoDiagram& diag, const Cone& cone, const Character& m) {
  const DiagramEntry& e = diag.at(cone);
  return e.C.contains(m) && !e.delta.contains(m);
}

KlyachkoDiagram sum_diagram(const KlyachkoDiagram& a, const KlyachkoDiagram& b) {
  if (a.s.size() != b.s.size() || a.entries.size() != b.entries.size())
    throw FanMismatch("diagrams are over different fans");
  for (std::size_t i = 0; i < a.entries.size(); ++i)
    if (a.entries[i].cone != b.entries[i].cone || !a.entries[i].C.frame().same_as(b.entries[i].C.frame()))
      throw FanMismatch("diagrams are over different fans");
  KlyachkoDiagram out;
  out.s.resize(a.s.size());
  for (std::size_t i = 0; i < a.s.size(); ++i) out.s[i] = std::min(a.s[i], b.s[i]);
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    const auto& ea = a.entries[i];
    const auto& eb = b.entries[i];
    LatticeRegion C = LatticeRegion::orthant(ea.C.frame_ptr(), restrict(out.s, ea.cone));
    LatticeRegion delta = ea.delta.intersect(eb.delta)
                              .unite(ea.delta.intersect(C.difference(eb.C)))
                              .unite(eb.delta.intersect(C.difference(ea.C)))
                              .unite(C.difference(ea.C.unite(eb.C)));
    out.entries.push_back({ea.cone, std::move(C), std::move(delta)});
  }
  return out;
}

std::vector<const DiagramEntry*> maximal_entries(const KlyachkoDiagram& diag, const Fan& fan) {
  std::vector<const DiagramEntry*> out;
  for (const auto& c : fan.max_cones()) out.push_back(&diag.at(c));
  return out;
}

std::vector<DiagramEntry> shift_diagram(const KlyachkoDiagram& diag, const Fan& fan, const Divisor& d) {
  if (d.size() != fan.num_rays()) throw InputError("divisor " + to_string(d.coeffs) + " has the wrong length");
  std::vector<DiagramEntry> out;
  for (const DiagramEntry* e : maximal_entries(diag, fan)) {
    // Translating by -tau_sigma lowers the bound on each ray rho by D_rho.
    const IntVec delta = negate(restrict(d.coeffs, e->cone));
    out.push_back({e->cone, e->C.shift_pairings(delta), e->delta.shift_pairings(delta)});
  }
  return out;
}

}  // namespace klyachko
