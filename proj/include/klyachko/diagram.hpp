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

#include "klyachko/monomial.hpp"
#include "klyachko/region.hpp"
#include "klyachko/toric_core.hpp"

#include <vector>

namespace klyachko {

/// The pair (C^sigma, Delta^sigma) for one cone.
struct DiagramEntry {
  Cone cone;
  LatticeRegion C;
  LatticeRegion delta;
};

/// Entries are aligned with Fan::cones().
struct KlyachkoDiagram {
  IntVec s;
  std::vector<DiagramEntry> entries;

  /// Throws InputError if the cone is not present.
  const DiagramEntry& at(const Cone& cone) const;
};

/// How monomials of equal degree along the last ray are ordered before
/// splitting into bands. The result does not depend on it.
enum class TieOrder { kInputOrder, kReversed };

/// Throws InputError for the zero ideal.
KlyachkoDiagram compute_diagram(const MonomialIdeal& ideal, const Fan& fan, TieOrder ties = TieOrder::kInputOrder);

/// m in C^sigma and m not in Delta^sigma.
bool filtration_member(const KlyachkoDiagram& diag, const Cone& cone, const Character& m);

/// Diagram of I + J from those of I and J over the same fan.
KlyachkoDiagram sum_diagram(const KlyachkoDiagram& a, const KlyachkoDiagram& b);

/// Per maximal cone (in Fan::max_cones() order), the regions C^sigma(D) and
/// Delta^sigma(D): characters m with x^(m+D) in the corresponding part.
std::vector<DiagramEntry> shift_diagram(const KlyachkoDiagram& diag, const Fan& fan, const Divisor& d);

/// Maximal-cone entries of a diagram, in Fan::max_cones() order.
std::vector<const DiagramEntry*> maximal_entries(const KlyachkoDiagram& diag, const Fan& fan);

}  // namespace klyachko
