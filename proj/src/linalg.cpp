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

#include "klyachko/linalg.hpp"

#include <sstream>
#include <utility>

namespace klyachko {

std::string to_string(const IntVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

}  // namespace klyachko

namespace klyachko::linalg {

BigMatrix to_big(const IntMatrix& a) {
  BigMatrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i].assign(a[i].begin(), a[i].end());
  return out;
}

IntMatrix to_int(const BigMatrix& a) {
  IntMatrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i].reserve(a[i].size());
    for (const auto& v : a[i]) out[i].push_back(klyachko::to_int(v));
  }
  return out;
}

BigMatrix identity(std::size_t n) {
  BigMatrix out(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
  return out;
}

BigMatrix multiply(const BigMatrix& a, const BigMatrix& b) {
  const std::size_t rows = a.size();
  const std::size_t inner = b.size();
  const std::size_t cols = inner ? b[0].size() : 0;
  BigMatrix out(rows, std::vector<BigInt>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

IntMatrix transpose(const IntMatrix& a) {
  if (a.empty()) return {};
  IntMatrix out(a[0].size(), IntVec(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) out[j][i] = a[i][j];
  return out;
}

namespace {

void row_axpy(std::vector<BigInt>& dst, const std::vector<BigInt>& src, const BigInt& q) {
  for (std::size_t j = 0; j < dst.size(); ++j) dst[j] -= q * src[j];
}

void row_negate(std::vector<BigInt>& row) {
  for (auto& v : row) v = -v;
}

}  // namespace

Echelon row_echelon(const BigMatrix& a) {
  Echelon out;
  out.echelon = a;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  out.transform = identity(rows);
  auto& h = out.echelon;
  auto& u = out.transform;

  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    // Euclid on the column: repeatedly move the smallest nonzero entry up
    // and reduce everything below it.
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = row; i < rows; ++i) {
        if (h[i][col] == 0) continue;
        if (best == rows || abs(h[i][col]) < abs(h[best][col])) best = i;
      }
      if (best == rows) break;
      if (best != row) {
        std::swap(h[best], h[row]);
        std::swap(u[best], u[row]);
      }
      bool clean = true;
      for (std::size_t i = row + 1; i < rows; ++i) {
        if (h[i][col] == 0) continue;
        BigInt q = h[i][col] / h[row][col];
        row_axpy(h[i], h[row], q);
        row_axpy(u[i], u[row], q);
        if (h[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (h[row][col] == 0) continue;
    if (h[row][col] < 0) {
      row_negate(h[row]);
      row_negate(u[row]);
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  return out;
}

BigInt determinant(const BigMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  BigMatrix m = a;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::optional<IntMatrix> unimodular_inverse(const IntMatrix& a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) return std::nullopt;
  Echelon e = row_echelon(to_big(a));
  if (e.pivot_cols.size() != n) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i)
    if (e.echelon[i][i] != 1) return std::nullopt;
  // Back substitution to the identity.
  for (std::size_t col = n; col-- > 0;) {
    for (std::size_t i = 0; i < col; ++i) {
      BigInt q = e.echelon[i][col];
      if (q == 0) continue;
      row_axpy(e.echelon[i], e.echelon[col], q);
      row_axpy(e.transform[i], e.transform[col], q);
    }
  }
  return to_int(e.transform);
}

IntVec apply(const IntMatrix& a, const IntVec& x) {
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = dot(a[i], x);
  return out;
}

}  // namespace klyachko::linalg
