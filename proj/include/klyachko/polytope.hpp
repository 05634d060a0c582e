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

#include "klyachko/integer.hpp"

#include <functional>
#include <vector>

namespace klyachko {

/// Integer points of {x in Z^d : A x <= b}, enumerated exactly by
/// Fourier-Motzkin projection followed by a depth-first scan with integer
/// rounding of the projected bounds.
class IntegerPolyhedron {
 public:
  explicit IntegerPolyhedron(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }

  /// Adds the constraint a . x <= b.
  void add_upper(IntVec a, Int b);
  /// Adds the constraint a . x >= b.
  void add_lower(const IntVec& a, Int b);

  /// Calls f on every integer point in lexicographic order. Throws Unbounded
  /// if the set is infinite.
  void for_each_point(const std::function<void(const IntVec&)>& f) const;
  std::vector<IntVec> points() const;

 private:
  struct Row {
    IntVec a;
    Int b;
    auto operator<=>(const Row&) const = default;
  };
  static std::vector<std::vector<Row>> project(std::vector<Row> rows, std::size_t dim, bool& infeasible);

  std::size_t dim_;
  std::vector<Row> rows_;
  bool infeasible_ = false;
};

}  // namespace klyachko
