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

#include <optional>
#include <vector>

namespace klyachko::linalg {

using BigMatrix = std::vector<std::vector<BigInt>>;
using IntMatrix = std::vector<IntVec>;

BigMatrix to_big(const IntMatrix& a);
IntMatrix to_int(const BigMatrix& a);

BigMatrix identity(std::size_t n);
BigMatrix multiply(const BigMatrix& a, const BigMatrix& b);
IntMatrix transpose(const IntMatrix& a);

/// Result of unimodular row reduction: transform * input == echelon.
struct Echelon {
  BigMatrix echelon;
  BigMatrix transform;
  /// Column index of the pivot of each nonzero row, in row order.
  std::vector<std::size_t> pivot_cols;
};

/// Row echelon form over Z using only unimodular row operations (swaps,
/// negations and integer row additions). Pivots are positive.
Echelon row_echelon(const BigMatrix& a);

/// Determinant via fraction-free (Bareiss) elimination.
BigInt determinant(const BigMatrix& a);

/// Integer inverse of a square matrix with determinant +-1; nullopt otherwise.
std::optional<IntMatrix> unimodular_inverse(const IntMatrix& a);

/// Matrix-vector product with checked arithmetic.
IntVec apply(const IntMatrix& a, const IntVec& x);

}  // namespace klyachko::linalg
