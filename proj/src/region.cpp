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

#include "klyachko/region.hpp"

#include "klyachko/polytope.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace klyachko {

Interval Interval::shifted(Int d) const {
  return {lo == kNegInf ? kNegInf : checked_add(lo, d), hi == kPosInf ? kPosInf : checked_add(hi, d)};
}

bool Cell::empty() const {
  return std::any_of(bounds.begin(), bounds.end(), [](const Interval& i) { return i.empty(); });
}

bool Cell::contains_pairings(const IntVec& p) const {
  for (std::size_t i = 0; i < bounds.size(); ++i)
    if (!bounds[i].contains(p[i])) return false;
  return true;
}

Cell Cell::intersect(const Cell& o) const {
  Cell out{bounds};
  for (std::size_t i = 0; i < bounds.size(); ++i) out.bounds[i] = bounds[i].intersect(o.bounds[i]);
  return out;
}

std::vector<Cell> Cell::minus(const Cell& o) const {
  if (empty()) return {};
  if (intersect(o).empty()) return {*this};
  std::vector<Cell> out;
  Cell cur = *this;
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    const Interval& c = cur.bounds[i];
    const Interval& x = o.bounds[i];
    if (x.lo > c.lo) {
      Cell piece = cur;
      piece.bounds[i] = {c.lo, checked_sub(x.lo, 1)};
      out.push_back(std::move(piece));
    }
    if (x.hi < c.hi) {
      Cell piece = cur;
      piece.bounds[i] = {checked_add(x.hi, 1), c.hi};
      out.push_back(std::move(piece));
    }
    cur.bounds[i] = c.intersect(x);
  }
  return out;
}

std::string cell_string(const Cone& cone, const Cell& cell) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < cell.bounds.size(); ++i) {
    if (i) os << ", ";
    const Interval& b = cell.bounds[i];
    os << "rho" << cone[i] << ":";
    if (b.lo == kNegInf)
      os << "(-inf";
    else
      os << '[' << b.lo;
    os << ',';
    if (b.hi == kPosInf)
      os << "+inf)";
    else
      os << b.hi << ']';
  }
  os << '}';
  return os.str();
}

LatticeRegion::LatticeRegion(std::shared_ptr<const ConeFrame> frame, std::vector<Cell> cells) : frame_(std::move(frame)) {
  for (auto& c : cells) {
    if (c.bounds.size() != frame_->size()) throw InputError("cell does not match the cone's ray count");
    if (!c.empty()) cells_.push_back(std::move(c));
  }
}

LatticeRegion LatticeRegion::full(std::shared_ptr<const ConeFrame> frame) {
  Cell c{std::vector<Interval>(frame->size())};
  return LatticeRegion(std::move(frame), {std::move(c)});
}

LatticeRegion LatticeRegion::orthant(std::shared_ptr<const ConeFrame> frame, const IntVec& lower) {
  Cell c;
  for (Int lo : lower) c.bounds.push_back(Interval::at_least(lo));
  return LatticeRegion(std::move(frame), {std::move(c)});
}

LatticeRegion LatticeRegion::from_points(std::shared_ptr<const ConeFrame> frame, const std::vector<Character>& points) {
  std::vector<Cell> cells;
  for (const auto& m : points) {
    if (m.size() != frame->dim()) throw InputError("point " + to_string(m.coords) + " has the wrong dimension");
    Cell c;
    for (Int v : frame->pairings(m)) c.bounds.push_back({v, v});
    cells.push_back(std::move(c));
  }
  return LatticeRegion(std::move(frame), std::move(cells));
}

bool LatticeRegion::contains(const Character& m) const { return contains_pairings(frame_->pairings(m)); }

bool LatticeRegion::contains_pairings(const IntVec& p) const {
  return std::any_of(cells_.begin(), cells_.end(), [&](const Cell& c) { return c.contains_pairings(p); });
}

void LatticeRegion::require_same_cone(const LatticeRegion& o) const {
  if (frame_ != o.frame_ && !frame_->same_as(*o.frame_))
    throw ConeMismatch("regions live over different cones");
}

LatticeRegion LatticeRegion::intersect(const LatticeRegion& o) const {
  require_same_cone(o);
  std::vector<Cell> out;
  for (const auto& a : cells_)
    for (const auto& b : o.cells_) out.push_back(a.intersect(b));
  return LatticeRegion(frame_, std::move(out));
}

LatticeRegion LatticeRegion::unite(const LatticeRegion& o) const {
  require_same_cone(o);
  std::vector<Cell> out = cells_;
  out.insert(out.end(), o.cells_.begin(), o.cells_.end());
  return LatticeRegion(frame_, std::move(out));
}

LatticeRegion LatticeRegion::difference(const LatticeRegion& o) const {
  require_same_cone(o);
  std::vector<Cell> cur = cells_;
  for (const auto& b : o.cells_) {
    std::vector<Cell> next;
    for (const auto& a : cur) {
      auto pieces = a.minus(b);
      next.insert(next.end(), pieces.begin(), pieces.end());
    }
    cur = std::move(next);
  }
  return LatticeRegion(frame_, std::move(cur));
}

LatticeRegion LatticeRegion::shift(const Character& tau) const { return shift_pairings(frame_->pairings(tau)); }

LatticeRegion LatticeRegion::shift_pairings(const IntVec& delta) const {
  std::vector<Cell> out = cells_;
  for (auto& c : out)
    for (std::size_t i = 0; i < c.bounds.size(); ++i) c.bounds[i] = c.bounds[i].shifted(delta[i]);
  return LatticeRegion(frame_, std::move(out));
}

LatticeRegion LatticeRegion::disjoint() const {
  std::vector<Cell> out;
  for (const auto& c : cells_) {
    std::vector<Cell> pieces{c};
    for (const auto& prev : out) {
      std::vector<Cell> next;
      for (const auto& p : pieces) {
        auto q = p.minus(prev);
        next.insert(next.end(), q.begin(), q.end());
      }
      pieces = std::move(next);
    }
    out.insert(out.end(), pieces.begin(), pieces.end());
  }
  return LatticeRegion(frame_, std::move(out));
}

int LatticeRegion::infinite_witness() const {
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    const Cell& c = cells_[i];
    if (frame_->size() < frame_->dim()) return static_cast<int>(i);
    for (const auto& b : c.bounds)
      if (!b.bounded()) return static_cast<int>(i);
  }
  return -1;
}

bool LatticeRegion::is_finite() const { return infinite_witness() < 0; }

std::vector<Character> LatticeRegion::enumerate() const {
  if (int w = infinite_witness(); w >= 0)
    throw InfiniteRegion("region over cone is infinite; witness cell " + cell_string(cone(), cells_[w]), cells_[w]);
  std::set<Character> out;
  for (const auto& c : disjoint().cells_) {
    IntVec p(c.bounds.size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = c.bounds[i].lo;
    while (true) {
      out.insert(frame_->from_dual(p));
      std::size_t i = 0;
      while (i < p.size() && p[i] == c.bounds[i].hi) {
        p[i] = c.bounds[i].lo;
        ++i;
      }
      if (i == p.size()) break;
      ++p[i];
    }
  }
  return {out.begin(), out.end()};
}

Int LatticeRegion::count() const {
  if (int w = infinite_witness(); w >= 0)
    throw InfiniteRegion("region over cone is infinite; witness cell " + cell_string(cone(), cells_[w]), cells_[w]);
  Int total = 0;
  for (const auto& c : disjoint().cells_) {
    Int n = 1;
    for (const auto& b : c.bounds) n = checked_mul(n, checked_add(checked_sub(b.hi, b.lo), 1));
    total = checked_add(total, n);
  }
  return total;
}

std::vector<Character> polytope_points(const Fan& fan, const Divisor& d) {
  if (d.size() != fan.num_rays()) throw InputError("divisor " + to_string(d.coeffs) + " has the wrong length");
  auto frame = fan.frame_of(fan.max_cones().at(0));
  IntegerPolyhedron poly(fan.dim());
  for (std::size_t i = 0; i < fan.num_rays(); ++i) poly.add_lower(frame->express(fan.ray(i)), checked_sub(0, d[i]));
  std::vector<Character> out;
  poly.for_each_point([&](const IntVec& p) { out.push_back(frame->from_dual(p)); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Character> enumerate_in_polytope(const Fan& fan, const Divisor& d, const std::vector<LatticeRegion>& regions,
                                             Combine mode) {
  std::vector<Character> out;
  for (auto& m : polytope_points(fan, d)) {
    bool keep = mode == Combine::kAll;
    for (const auto& reg : regions) {
      const bool in = reg.contains(m);
      if (mode == Combine::kAll && !in) {
        keep = false;
        break;
      }
      if (mode == Combine::kAny && in) {
        keep = true;
        break;
      }
    }
    if (keep) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace klyachko
