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

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace klyachko {

/// Machine integer used for lattice coordinates. Every arithmetic step on
/// these goes through the checked helpers below, so overflow is reported
/// instead of silently wrapping.
using Int = std::int64_t;
using IntVec = std::vector<Int>;

/// Arbitrary precision integer for elimination on integer matrices.
using BigInt = boost::multiprecision::cpp_int;

/// Sentinels for unbounded interval ends.
inline constexpr Int kNegInf = std::numeric_limits<Int>::min();
inline constexpr Int kPosInf = std::numeric_limits<Int>::max();

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

inline Int checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("integer overflow in addition");
  return out;
}

inline Int checked_sub(Int a, Int b) {
  Int out;
  if (__builtin_sub_overflow(a, b, &out)) throw OverflowError("integer overflow in subtraction");
  return out;
}

inline Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("integer overflow in multiplication");
  return out;
}

/// Exact dot product; throws OverflowError on overflow.
inline Int dot(const IntVec& a, const IntVec& b) {
  Int acc = 0;
  const std::size_t n = a.size() < b.size() ? a.size() : b.size();
  for (std::size_t i = 0; i < n; ++i) acc = checked_add(acc, checked_mul(a[i], b[i]));
  return acc;
}

/// Floor of a / b for b != 0.
inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Ceiling of a / b for b != 0.
inline Int ceil_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

inline Int to_int(const BigInt& v) {
  if (v > BigInt(std::numeric_limits<Int>::max()) || v < BigInt(std::numeric_limits<Int>::min()))
    throw OverflowError("value does not fit in 64 bits: " + v.str());
  return v.convert_to<Int>();
}

inline IntVec add(const IntVec& a, const IntVec& b) {
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_add(a[i], b[i]);
  return out;
}

inline IntVec sub(const IntVec& a, const IntVec& b) {
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_sub(a[i], b[i]);
  return out;
}

inline IntVec negate(const IntVec& a) {
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_sub(0, a[i]);
  return out;
}

std::string to_string(const IntVec& v);

}  // namespace klyachko
