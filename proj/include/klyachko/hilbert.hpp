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
#include "klyachko/region.hpp"
#include "klyachko/toric_core.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace klyachko {

/// h_{R/I}(alpha) for the saturated ideal I with diagram diag: the points of
/// C_0(alpha-bar) outside the intersection of C^sigma minus Delta^sigma.
Int hilbert_value(const ToricVariety& X, const KlyachkoDiagram& diag, const ClassDegree& alpha);

/// h_{R/I^sat}(alpha) for any nonzero I, via I = x^s I_0:
/// h_R(alpha) - h_R(alpha - [s]) + h_{R/I_0^sat}(alpha - [s]).
Int hilbert_value_general(const ToricVariety& X, const MonomialIdeal& ideal, const ClassDegree& alpha);

struct ConeFiniteness {
  Cone cone;
  bool finite = true;
  std::optional<Cell> witness;
};

struct ConstancyVerdict {
  std::optional<Int> value;
  /// Why the polynomial is not constant, when value is absent.
  std::string reason;
  std::vector<ConeFiniteness> cones;
};

/// The Hilbert polynomial of R/I is constant iff s = 0 and every maximal
/// Delta is finite; the constant is then the sum of |Delta^sigma|.
ConstancyVerdict constant_hilbert_poly(const KlyachkoDiagram& diag, const Fan& fan);

struct HilbertReport {
  std::map<ClassDegree, Int> values;
  ConstancyVerdict constancy;
};

HilbertReport hilbert_report(const ToricVariety& X, const MonomialIdeal& ideal, const std::vector<ClassDegree>& degrees);

}  // namespace klyachko
