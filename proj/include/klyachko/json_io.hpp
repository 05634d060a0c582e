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
#include "klyachko/hilbert.hpp"
#include "klyachko/monomial.hpp"
#include "klyachko/reconstruction.hpp"
#include "klyachko/region.hpp"
#include "klyachko/toric_core.hpp"

#include <json.hpp>

#include <string>

namespace klyachko::io {

using Json = nlohmann::json;

/// Parses text as JSON; throws InputError with the parser's diagnostics.
Json parse(const std::string& text, const std::string& origin);
Json read_file(const std::string& path);

/// {"dim": n, "rays": [[...]], "max_cones": [[...]], "variables": [...]?}
Fan fan_from_json(const Json& j);
Json fan_to_json(const Fan& fan);
/// Catalog name ("P2", "H3", "P1xP1") or path to a fan JSON file.
Fan load_fan(const std::string& source);

/// {"gens": [[k_1, ..., k_r], ...]}
MonomialIdeal ideal_from_json(const Json& j, std::size_t nvars);
Json ideal_to_json(const MonomialIdeal& ideal, const Fan& fan);

/// {"cone": [...], "cells": [{"<ray>": [lo, hi|null]}, ...]}; null is an
/// infinite end.
Json region_to_json(const LatticeRegion& region);
LatticeRegion region_from_json(const Json& j, std::shared_ptr<const ConeFrame> frame);

/// "(1,2)"; "()" for the zero cone.
std::string cone_key(const Cone& cone);

/// {"s": [...], "cones": {"(i,j)": {"C": region, "Delta": region,
/// "finite": bool, "points": [...]}}}. Points are listed when Delta is
/// finite over a maximal cone.
Json diagram_to_json(const KlyachkoDiagram& diag, const Fan& fan);
/// Accepts "Delta" as a region or "points" as a list of characters; cones
/// left out have empty Delta. C^sigma is rebuilt from s.
KlyachkoDiagram diagram_from_json(const Json& j, const Fan& fan);

bool looks_like_diagram(const Json& j);

Json reconstruction_to_json(const ReconstructionResult& r, const Fan& fan);
Json graded_piece_to_json(const GradedPiece& p, const Fan& fan);
Json constancy_to_json(const ConstancyVerdict& v);

/// Stable text form: two-space indentation and a trailing newline.
std::string dump(const Json& j);

}  // namespace klyachko::io
