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

#include "klyachko/polytope.hpp"

#include "klyachko/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace klyachko {

namespace {

// Divides a row by the gcd of its coefficients, rounding the bound down.
// Returns false for a row 0 <= b with b < 0.
template <class Row>
bool normalize(Row& row, bool& trivial) {
  Int g = 0;
  for (Int v : row.a) g = std::gcd(g, v);
  trivial = g == 0;
  if (trivial) return row.b >= 0;
  if (g != 1) {
    for (Int& v : row.a) v /= g;
    row.b = floor_div(row.b, g);
  }
  return true;
}

}  // namespace

void IntegerPolyhedron::add_upper(IntVec a, Int b) {
  if (a.size() != dim_) throw Error("constraint has the wrong length");
  Row row{std::move(a), b};
  bool trivial = false;
  if (!normalize(row, trivial)) infeasible_ = true;
  if (!trivial) rows_.push_back(std::move(row));
}

void IntegerPolyhedron::add_lower(const IntVec& a, Int b) { add_upper(negate(a), checked_sub(0, b)); }

// levels[k] holds the constraints on x_0..x_k obtained by eliminating
// x_{k+1}..x_{d-1}.
std::vector<std::vector<IntegerPolyhedron::Row>> IntegerPolyhedron::project(std::vector<Row> rows, std::size_t dim,
                                                                             bool& infeasible) {
  std::vector<std::vector<Row>> levels(dim);
  for (std::size_t k = dim; k-- > 0;) {
    std::set<Row> unique(rows.begin(), rows.end());
    rows.assign(unique.begin(), unique.end());
    levels[k] = rows;
    std::vector<Row> next, pos, neg;
    for (auto& row : rows) {
      if (row.a[k] > 0)
        pos.push_back(row);
      else if (row.a[k] < 0)
        neg.push_back(row);
      else
        next.push_back(row);
    }
    for (const auto& p : pos)
      for (const auto& q : neg) {
        const Int cp = -q.a[k];
        const Int cq = p.a[k];
        Row comb{IntVec(dim, 0), checked_add(checked_mul(cp, p.b), checked_mul(cq, q.b))};
        for (std::size_t j = 0; j < dim; ++j)
          comb.a[j] = checked_add(checked_mul(cp, p.a[j]), checked_mul(cq, q.a[j]));
        bool trivial = false;
        if (!normalize(comb, trivial)) {
          infeasible = true;
          return levels;
        }
        if (!trivial) next.push_back(std::move(comb));
      }
    rows = std::move(next);
  }
  for (const auto& row : rows)
    if (row.b < 0) infeasible = true;
  return levels;
}

void IntegerPolyhedron::for_each_point(const std::function<void(const IntVec&)>& f) const {
  if (infeasible_) return;
  if (dim_ == 0) {
    f(IntVec{});
    return;
  }
  bool infeasible = false;
  const auto levels = project(rows_, dim_, infeasible);
  if (infeasible) return;

  IntVec x(dim_, 0);
  std::function<void(std::size_t)> scan = [&](std::size_t k) {
    Int lo = kNegInf, hi = kPosInf;
    for (const auto& row : levels[k]) {
      const Int c = row.a[k];
      if (c == 0) {
        // Constraint on earlier coordinates only; the projection guarantees
        // it rationally, but integer rounding may still violate it.
        Int acc = 0;
        for (std::size_t j = 0; j < k; ++j) acc = checked_add(acc, checked_mul(row.a[j], x[j]));
        if (acc > row.b) return;
        continue;
      }
      Int rest = row.b;
      for (std::size_t j = 0; j < k; ++j) rest = checked_sub(rest, checked_mul(row.a[j], x[j]));
      if (c > 0)
        hi = std::min(hi, floor_div(rest, c));
      else
        lo = std::max(lo, ceil_div(rest, c));
    }
    if (lo > hi) return;
    if (lo == kNegInf || hi == kPosInf) throw Unbounded("integer point set is unbounded");
    for (Int v = lo; v <= hi; ++v) {
      x[k] = v;
      if (k + 1 == dim_)
        f(x);
      else
        scan(k + 1);
    }
  };
  scan(0);
}

std::vector<IntVec> IntegerPolyhedron::points() const {
  std::vector<IntVec> out;
  for_each_point([&](const IntVec& p) { out.push_back(p); });
  return out;
}

}  // namespace klyachko
