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

#include "klyachko/json_io.hpp"

#include "klyachko/errors.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace klyachko::io {

namespace {

IntVec int_vec(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be an array of integers");
  IntVec out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw InputError(what + " must be an array of integers");
    out.push_back(v.get<Int>());
  }
  return out;
}

Json bound_json(Int v) { return (v == kPosInf || v == kNegInf) ? Json(nullptr) : Json(v); }

Int bound_from(const Json& j, Int infinite, const std::string& what) {
  if (j.is_null()) return infinite;
  if (!j.is_number_integer()) throw InputError(what + " bound must be an integer or null");
  return j.get<Int>();
}

const Json& field(const Json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key)) throw InputError(what + " is missing \"" + key + "\"");
  return j.at(key);
}

}  // namespace

Json parse(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(origin + ": " + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

Fan fan_from_json(const Json& j) {
  const Json& dim = field(j, "dim", "fan");
  if (!dim.is_number_integer() || dim.get<Int>() < 1) throw InputError("fan \"dim\" must be a positive integer");
  std::vector<IntVec> rays;
  const Json& jr = field(j, "rays", "fan");
  if (!jr.is_array()) throw InputError("fan \"rays\" must be an array");
  for (const auto& r : jr) rays.push_back(int_vec(r, "ray"));
  std::vector<Cone> cones;
  const Json& jc = field(j, "max_cones", "fan");
  if (!jc.is_array()) throw InputError("fan \"max_cones\" must be an array");
  for (const auto& c : jc) {
    Cone cone;
    for (Int i : int_vec(c, "cone")) {
      if (i < 0 || i >= static_cast<Int>(rays.size())) throw InvalidFan("cone references nonexistent ray " + std::to_string(i));
      cone.push_back(static_cast<int>(i));
    }
    cones.push_back(std::move(cone));
  }
  std::vector<std::string> vars;
  if (j.contains("variables")) {
    for (const auto& v : j.at("variables")) {
      if (!v.is_string()) throw InputError("fan \"variables\" must be strings");
      vars.push_back(v.get<std::string>());
    }
    if (vars.size() != rays.size()) throw InputError("fan \"variables\" must name every ray");
  }
  return Fan::from_maximal(static_cast<std::size_t>(dim.get<Int>()), std::move(rays), std::move(cones), std::move(vars));
}

Json fan_to_json(const Fan& fan) {
  Json j;
  j["dim"] = fan.dim();
  j["rays"] = fan.rays();
  j["max_cones"] = fan.max_cones();
  j["variables"] = fan.variables();
  return j;
}

Fan load_fan(const std::string& source) {
  if (std::filesystem::is_regular_file(source)) return fan_from_json(read_file(source));
  return catalog_fan(source);
}

MonomialIdeal ideal_from_json(const Json& j, std::size_t nvars) {
  const Json& gens = field(j, "gens", "ideal");
  if (!gens.is_array()) throw InputError("ideal \"gens\" must be an array");
  std::vector<Monomial> out;
  for (const auto& g : gens) out.emplace_back(int_vec(g, "generator"));
  return MonomialIdeal(nvars, std::move(out));
}

Json ideal_to_json(const MonomialIdeal& ideal, const Fan& fan) {
  Json gens = Json::array(), names = Json::array();
  for (const auto& g : ideal.gens()) {
    gens.push_back(g.exps);
    names.push_back(monomial_string(g, fan.variables()));
  }
  return Json{{"gens", gens}, {"monomials", names}};
}

std::string cone_key(const Cone& cone) {
  std::string out = "(";
  for (std::size_t i = 0; i < cone.size(); ++i) out += (i ? "," : "") + std::to_string(cone[i]);
  return out + ")";
}

Json region_to_json(const LatticeRegion& region) {
  Json cells = Json::array();
  std::vector<Cell> sorted = region.cells();
  std::sort(sorted.begin(), sorted.end());
  for (const auto& c : sorted) {
    Json cell = Json::object();
    for (std::size_t i = 0; i < c.bounds.size(); ++i)
      cell[std::to_string(region.cone()[i])] = Json::array({bound_json(c.bounds[i].lo), bound_json(c.bounds[i].hi)});
    cells.push_back(std::move(cell));
  }
  return Json{{"cone", region.cone()}, {"cells", cells}};
}

LatticeRegion region_from_json(const Json& j, std::shared_ptr<const ConeFrame> frame) {
  if (j.contains("cone")) {
    IntVec c = int_vec(j.at("cone"), "region cone");
    if (Cone(c.begin(), c.end()) != frame->rays()) throw ConeMismatch("region cone does not match its key");
  }
  const Json& cells = field(j, "cells", "region");
  if (!cells.is_array()) throw InputError("region \"cells\" must be an array");
  std::vector<Cell> out;
  for (const auto& jc : cells) {
    if (!jc.is_object()) throw InputError("region cell must be an object");
    Cell cell{std::vector<Interval>(frame->size())};
    for (const auto& [key, value] : jc.items()) {
      const auto pos = std::find_if(frame->rays().begin(), frame->rays().end(),
                                    [&](int r) { return std::to_string(r) == key; });
      if (pos == frame->rays().end()) throw ConeMismatch("cell constrains ray " + key + " outside its cone");
      if (!value.is_array() || value.size() != 2) throw InputError("cell bound must be [lo, hi]");
      cell.bounds[pos - frame->rays().begin()] = {bound_from(value[0], kNegInf, "lower"), bound_from(value[1], kPosInf, "upper")};
    }
    out.push_back(std::move(cell));
  }
  return LatticeRegion(std::move(frame), std::move(out));
}

Json diagram_to_json(const KlyachkoDiagram& diag, const Fan& fan) {
  Json cones = Json::object();
  const auto& maximal = fan.max_cone_indices();
  for (std::size_t i = 0; i < diag.entries.size(); ++i) {
    const auto& e = diag.entries[i];
    Json entry{{"C", region_to_json(e.C)}, {"Delta", region_to_json(e.delta)}};
    const bool is_max = std::binary_search(maximal.begin(), maximal.end(), i);
    const bool finite = e.delta.is_finite();
    entry["finite"] = finite;
    if (is_max && finite) {
      Json pts = Json::array();
      for (const auto& m : e.delta.enumerate()) pts.push_back(m.coords);
      entry["points"] = pts;
    }
    cones[cone_key(e.cone)] = std::move(entry);
  }
  return Json{{"s", diag.s}, {"cones", cones}};
}

bool looks_like_diagram(const Json& j) { return j.is_object() && j.contains("s") && !j.contains("gens"); }

KlyachkoDiagram diagram_from_json(const Json& j, const Fan& fan) {
  KlyachkoDiagram diag;
  diag.s = int_vec(field(j, "s", "diagram"), "diagram \"s\"");
  if (diag.s.size() != fan.num_rays()) throw FanMismatch("diagram \"s\" has the wrong length for this fan");
  for (Int v : diag.s)
    if (v < 0) throw InputError("diagram \"s\" must be nonnegative");
  Json cones = j.contains("cones") ? j.at("cones") : Json::object();
  if (!cones.is_object()) throw InputError("diagram \"cones\" must be an object");
  for (const auto& [key, _] : cones.items()) {
    const bool known = std::any_of(fan.cones().begin(), fan.cones().end(), [&](const Cone& c) { return cone_key(c) == key; });
    if (!known) throw FanMismatch("diagram has cone " + key + " which is not in the fan");
  }
  for (std::size_t i = 0; i < fan.cones().size(); ++i) {
    const Cone& cone = fan.cones()[i];
    auto frame = fan.frame(i);
    IntVec lower;
    for (int r : cone) lower.push_back(diag.s[r]);
    LatticeRegion C = LatticeRegion::orthant(frame, lower);
    LatticeRegion delta = LatticeRegion::empty(frame);
    const std::string key = cone_key(cone);
    if (cones.contains(key)) {
      const Json& e = cones.at(key);
      if (e.contains("Delta") && e.at("Delta").is_object()) {
        delta = region_from_json(e.at("Delta"), frame);
      } else if (e.contains("points") || (e.contains("Delta") && e.at("Delta").is_array())) {
        const Json& pts = e.contains("points") ? e.at("points") : e.at("Delta");
        std::vector<Character> chars;
        for (const auto& p : pts) chars.emplace_back(int_vec(p, "point"));
        if (!frame->unimodular()) throw InputError("points may only be given for maximal cones");
        delta = LatticeRegion::from_points(frame, chars);
      }
    }
    diag.entries.push_back({cone, std::move(C), std::move(delta)});
  }
  return diag;
}

Json reconstruction_to_json(const ReconstructionResult& r, const Fan& fan) {
  Json j = ideal_to_json(r.ideal, fan);
  Json pre = Json::array();
  for (const auto& g : r.pre_minimal) pre.push_back(monomial_string(g, fan.variables()));
  j["pre_minimal"] = pre;
  Json by = Json::array();
  for (const auto& [u, gs] : r.by_degree) {
    Json names = Json::array();
    for (const auto& g : gs) names.push_back(monomial_string(g, fan.variables()));
    by.push_back(Json{{"degree", u.coords}, {"new", names}});
  }
  j["by_degree"] = by;
  return j;
}

Json graded_piece_to_json(const GradedPiece& p, const Fan& fan) {
  Json names = Json::array();
  for (const auto& m : p.monomials(fan)) names.push_back(monomial_string(m, fan.variables()));
  return Json{{"degree", p.degree.coords}, {"dim", p.basis.size()}, {"basis", names}};
}

Json constancy_to_json(const ConstancyVerdict& v) {
  Json cones = Json::object();
  for (const auto& c : v.cones) {
    Json e{{"finite", c.finite}};
    if (c.witness) e["witness"] = cell_string(c.cone, *c.witness);
    cones[cone_key(c.cone)] = e;
  }
  Json j{{"constant_poly", v.value ? Json(*v.value) : Json(nullptr)}, {"cones", cones}};
  if (!v.value) j["reason"] = v.reason;
  return j;
}

namespace {

bool is_flat(const Json& j) {
  if (!j.is_array()) return !j.is_object();
  return std::all_of(j.begin(), j.end(), [](const Json& v) { return !v.is_array() && !v.is_object(); });
}

// Pretty printer that keeps arrays of scalars on one line.
void write(std::ostringstream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  if (is_flat(j)) {
    if (!j.is_array()) {
      os << j.dump();
      return;
    }
    os << '[';
    for (std::size_t i = 0; i < j.size(); ++i) os << (i ? ", " : "") << j[i].dump();
    os << ']';
    return;
  }
  const bool object = j.is_object();
  if (j.empty()) {
    os << (object ? "{}" : "[]");
    return;
  }
  os << (object ? "{\n" : "[\n");
  std::size_t i = 0;
  for (auto it = j.begin(); it != j.end(); ++it, ++i) {
    os << pad;
    if (object) os << Json(it.key()).dump() << ": ";
    write(os, it.value(), indent + 2);
    os << (i + 1 < j.size() ? ",\n" : "\n");
  }
  os << std::string(static_cast<std::size_t>(indent), ' ') << (object ? '}' : ']');
}

}  // namespace

std::string dump(const Json& j) {
  std::ostringstream os;
  write(os, j, 0);
  os << '\n';
  return os.str();
}

}  // namespace klyachko::io
