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

#include "klyachko/errors.hpp"
#include "klyachko/integer.hpp"
#include "klyachko/toric_core.hpp"
#include "klyachko/types.hpp"

#include <memory>
#include <string>
#include <vector>

namespace klyachko {

/// Closed integer interval; kNegInf / kPosInf mark missing ends.
struct Interval {
  Int lo = kNegInf;
  Int hi = kPosInf;

  static Interval at_least(Int lo) { return {lo, kPosInf}; }
  /// lo <= x < end.
  static Interval half_open(Int lo, Int end) { return {lo, end == kPosInf ? kPosInf : checked_sub(end, 1)}; }

  bool empty() const { return lo > hi; }
  bool bounded() const { return lo != kNegInf && hi != kPosInf; }
  bool contains(Int x) const { return lo <= x && x <= hi; }
  Interval intersect(const Interval& o) const { return {std::max(lo, o.lo), std::min(hi, o.hi)}; }
  Interval shifted(Int d) const;

  auto operator<=>(const Interval&) const = default;
};

/// Box in the coordinates <m, n(rho)>, one interval per ray of the cone.
struct Cell {
  std::vector<Interval> bounds;

  bool empty() const;
  bool contains_pairings(const IntVec& p) const;
  Cell intersect(const Cell& o) const;
  /// Pieces of this cell outside o, pairwise disjoint.
  std::vector<Cell> minus(const Cell& o) const;

  auto operator<=>(const Cell&) const = default;
};

/// Finite union of cells over a single cone.
class LatticeRegion {
 public:
  explicit LatticeRegion(std::shared_ptr<const ConeFrame> frame, std::vector<Cell> cells = {});

  static LatticeRegion empty(std::shared_ptr<const ConeFrame> frame) { return LatticeRegion(std::move(frame)); }
  /// All of M.
  static LatticeRegion full(std::shared_ptr<const ConeFrame> frame);
  /// { <m, rho_i> >= lower_i }.
  static LatticeRegion orthant(std::shared_ptr<const ConeFrame> frame, const IntVec& lower);
  /// Union of single-point cells. Requires a unimodular cone.
  static LatticeRegion from_points(std::shared_ptr<const ConeFrame> frame, const std::vector<Character>& points);

  const ConeFrame& frame() const { return *frame_; }
  const std::shared_ptr<const ConeFrame>& frame_ptr() const { return frame_; }
  const Cone& cone() const { return frame_->rays(); }
  const std::vector<Cell>& cells() const { return cells_; }

  bool contains(const Character& m) const;
  bool contains_pairings(const IntVec& p) const;
  bool is_empty() const { return cells_.empty(); }

  LatticeRegion intersect(const LatticeRegion& o) const;
  LatticeRegion unite(const LatticeRegion& o) const;
  LatticeRegion difference(const LatticeRegion& o) const;

  /// m in shift(tau) iff m - tau in this region.
  LatticeRegion shift(const Character& tau) const;
  /// Adds delta_i to both bounds on the i-th ray.
  LatticeRegion shift_pairings(const IntVec& delta) const;

  /// Same set written as pairwise disjoint cells.
  LatticeRegion disjoint() const;

  /// True iff the region is a finite set of characters.
  bool is_finite() const;
  /// Index of a nonempty unbounded cell, or -1.
  int infinite_witness() const;

  /// Sorted list of all points. Throws InfiniteRegion if infinite.
  std::vector<Character> enumerate() const;
  Int count() const;

 private:
  void require_same_cone(const LatticeRegion& o) const;

  std::shared_ptr<const ConeFrame> frame_;
  std::vector<Cell> cells_;
};

class InfiniteRegion : public Unbounded {
 public:
  InfiniteRegion(const std::string& what, Cell witness) : Unbounded(what), witness_(std::move(witness)) {}
  const Cell& witness() const { return witness_; }

 private:
  Cell witness_;
};

std::string cell_string(const Cone& cone, const Cell& cell);

/// Lattice points of C_0(D) = { m : <m, rho> + D_rho >= 0 for all rays },
/// sorted. Finite for complete fans.
std::vector<Character> polytope_points(const Fan& fan, const Divisor& d);

enum class Combine { kAll, kAny };

/// Points of C_0(D) lying in all (kAll) or some (kAny) of the regions.
std::vector<Character> enumerate_in_polytope(const Fan& fan, const Divisor& d, const std::vector<LatticeRegion>& regions,
                                             Combine mode);

}  // namespace klyachko
