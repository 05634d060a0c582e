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
#include "klyachko/toric_core.hpp"

#include <string>

namespace klyachko {

/// One text panel per maximal cone over the window -w..w in both
/// coordinates of M. Legend: '#' in C minus Delta, 'o' in Delta, '.' outside
/// C; at the origin these become '@', 'O' and '+'. Requires rank(M) = 2.
std::string render_ascii(const KlyachkoDiagram& diag, const Fan& fan, Int w);

/// The same panels as an SVG document: filled dots for C minus Delta,
/// hollow dots for Delta, a square marking the origin.
std::string render_svg(const KlyachkoDiagram& diag, const Fan& fan, Int w);

}  // namespace klyachko
