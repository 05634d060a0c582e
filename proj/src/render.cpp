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

#include "klyachko/render.hpp"

#include "klyachko/errors.hpp"

#include <sstream>

namespace klyachko {

namespace {

enum class Mark { kOutside, kDelta, kInside };

Mark classify(const DiagramEntry& e, const Character& m) {
  if (!e.C.contains(m)) return Mark::kOutside;
  return e.delta.contains(m) ? Mark::kDelta : Mark::kInside;
}

void require_rank_two(const Fan& fan) {
  if (fan.dim() != 2) throw InputError("rendering needs a rank-2 character lattice, got rank " + std::to_string(fan.dim()));
}

std::string cone_label(const Cone& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + std::to_string(c[i]);
  return out + ")";
}

}  // namespace

std::string render_ascii(const KlyachkoDiagram& diag, const Fan& fan, Int w) {
  require_rank_two(fan);
  std::ostringstream os;
  for (const DiagramEntry* e : maximal_entries(diag, fan)) {
    os << "cone " << cone_label(e->cone) << "  rays";
    for (int r : e->cone) os << ' ' << fan.variables()[r] << '=' << to_string(fan.ray(r));
    os << '\n';
    for (Int y = w; y >= -w; --y) {
      os << (y == 0 ? "  0 " : "    ");
      for (Int x = -w; x <= w; ++x) {
        const bool origin = x == 0 && y == 0;
        switch (classify(*e, Character{x, y})) {
          case Mark::kOutside: os << (origin ? '+' : '.'); break;
          case Mark::kDelta: os << (origin ? 'O' : 'o'); break;
          case Mark::kInside: os << (origin ? '@' : '#'); break;
        }
        if (x < w) os << ' ';
      }
      os << '\n';
    }
    os << '\n';
  }
  os << "legend: # in C minus Delta, o in Delta, . outside C; origin shown as @ O +\n";
  return os.str();
}

std::string render_svg(const KlyachkoDiagram& diag, const Fan& fan, Int w) {
  require_rank_two(fan);
  const Int step = 16;
  const Int side = (2 * w + 1) * step + 2 * step;
  const auto panels = maximal_entries(diag, fan);
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side * static_cast<Int>(panels.size()) << "\" height=\""
     << side + 2 * step << "\">\n";
  for (std::size_t k = 0; k < panels.size(); ++k) {
    const DiagramEntry& e = *panels[k];
    const Int ox = static_cast<Int>(k) * side + step;
    const Int oy = 2 * step;
    os << "  <g>\n    <text x=\"" << ox << "\" y=\"" << step << "\" font-family=\"monospace\" font-size=\"12\">cone "
       << cone_label(e.cone) << "</text>\n";
    for (Int y = w; y >= -w; --y)
      for (Int x = -w; x <= w; ++x) {
        const Int cx = ox + (x + w) * step + step / 2;
        const Int cy = oy + (w - y) * step + step / 2;
        const Mark mark = classify(e, Character{x, y});
        if (mark == Mark::kInside) {
          os << "    <rect x=\"" << cx - step / 2 << "\" y=\"" << cy - step / 2 << "\" width=\"" << step << "\" height=\""
             << step << "\" fill=\"#dde6f5\"/>\n";
          os << "    <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"4\" fill=\"black\"/>\n";
        } else if (mark == Mark::kDelta) {
          os << "    <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"4\" fill=\"white\" stroke=\"black\"/>\n";
        } else {
          os << "    <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"1\" fill=\"#999999\"/>\n";
        }
        if (x == 0 && y == 0)
          os << "    <rect x=\"" << cx - 6 << "\" y=\"" << cy - 6
             << "\" width=\"12\" height=\"12\" fill=\"none\" stroke=\"red\"/>\n";
      }
    os << "  </g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace klyachko
