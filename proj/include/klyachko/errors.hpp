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

#include <stdexcept>
#include <string>

namespace klyachko {

/// Base of all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent user input (bad JSON, wrong arity, zero ideal
/// where a nonzero one is required, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Fan fails smoothness/completeness validation.
class InvalidFan : public InputError {
 public:
  using InputError::InputError;
};

/// Two objects built over different cones or fans were combined.
class ConeMismatch : public InputError {
 public:
  using InputError::InputError;
};

class FanMismatch : public InputError {
 public:
  using InputError::InputError;
};

/// A reconstruction search box cut through a degree that still produced
/// new generators; the result cannot be trusted.
class SearchBoxTooSmall : public Error {
 public:
  using Error::Error;
};

/// Lattice point enumeration was asked for an unbounded set.
class Unbounded : public Error {
 public:
  using Error::Error;
};

}  // namespace klyachko
