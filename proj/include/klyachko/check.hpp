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

#include "klyachko/diagram.hpp"
#include "klyachko/monomial.hpp"
#include "klyachko/toric_core.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace klyachko {

struct PropertyResult {
  PropertyResult() = default;
  explicit PropertyResult(std::string n) : name(std::move(n)) {}

  std::string name;
  bool passed = true;
  /// First counterexample found, empty on success.
  std::string witness;
};

struct CheckOptions {
  /// Membership window: pairings in -W..W. Defaults to 2 + max exponent,
  /// or the KLYACHKO_WINDOW environment variable when set.
  std::optional<Int> window;
};

/// Membership window used for the ideal: explicit value, else the
/// environment override, else 2 + max generator exponent.
Int membership_window(const MonomialIdeal& ideal, const std::optional<Int>& explicit_window);

/// Degrees at which Hilbert functions are compared: the bounding box of the
/// classes of x^k, 0 <= k <= E + 1 (E the largest exponent per variable),
/// widened by one below.
std::vector<ClassDegree> hilbert_window(const CoxGrading& grading, const MonomialIdeal& ideal);

/// Runs every oracle comparison for I against the given diagram (normally
/// compute_diagram(I)): membership identity, saturation roundtrip, Hilbert
/// agreement, saturation invariance, tie-order independence and H^1
/// consistency.
std::vector<PropertyResult> check_ideal(const ToricVariety& X, const MonomialIdeal& ideal, const KlyachkoDiagram& diag,
                                        const CheckOptions& options = {});
std::vector<PropertyResult> check_ideal(const ToricVariety& X, const MonomialIdeal& ideal,
                                        const CheckOptions& options = {});

/// Uniformly 1..max_gens generators with exponents in 0..max_exp.
MonomialIdeal random_ideal(std::mt19937_64& rng, std::size_t nvars, Int max_exp = 5, std::size_t max_gens = 5);

}  // namespace klyachko
