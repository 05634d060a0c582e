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

#include "klyachko/toric_core.hpp"

#include "klyachko/errors.hpp"
#include "klyachko/linalg.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace klyachko {

namespace {

std::string cone_str(const Cone& c) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << '}';
  return os.str();
}

bool indices_valid(const Cone& c, std::size_t r) {
  return std::all_of(c.begin(), c.end(), [r](int i) { return i >= 0 && static_cast<std::size_t>(i) < r; });
}

// Calls f on every subset of `c` of the given size, in lex order.
template <class F>
void for_each_subset(const Cone& c, std::size_t k, F&& f) {
  if (k > c.size()) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    Cone sub;
    sub.reserve(k);
    for (std::size_t i : idx) sub.push_back(c[i]);
    f(sub);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == c.size() - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

ConeFrame::ConeFrame(Cone rays, std::vector<IntVec> normals, std::size_t dim)
    : rays_(std::move(rays)), normals_(std::move(normals)), dim_(dim) {
  if (rays_.size() == dim_) {
    if (auto inv = linalg::unimodular_inverse(normals_)) inverse_ = std::move(*inv);
  }
}

IntVec ConeFrame::pairings(const Character& m) const {
  IntVec out(normals_.size());
  for (std::size_t i = 0; i < normals_.size(); ++i) out[i] = dot(m.coords, normals_[i]);
  return out;
}

Character ConeFrame::from_dual(const IntVec& p) const {
  if (!inverse_) throw Error("cone " + cone_str(rays_) + " is not unimodular");
  return Character(linalg::apply(*inverse_, p));
}

IntVec ConeFrame::express(const IntVec& v) const {
  if (!inverse_) throw Error("cone " + cone_str(rays_) + " is not unimodular");
  IntVec out(dim_, 0);
  for (std::size_t j = 0; j < dim_; ++j)
    for (std::size_t k = 0; k < dim_; ++k) out[j] = checked_add(out[j], checked_mul(v[k], (*inverse_)[k][j]));
  return out;
}

bool ConeFrame::same_as(const ConeFrame& other) const {
  return rays_ == other.rays_ && normals_ == other.normals_ && dim_ == other.dim_;
}

Fan Fan::from_maximal(std::size_t dim, std::vector<IntVec> rays, std::vector<Cone> max_cones,
                      std::vector<std::string> variables) {
  Fan fan;
  fan.dim_ = dim;
  fan.rays_ = std::move(rays);
  for (auto& c : max_cones) std::sort(c.begin(), c.end());
  fan.max_cones_ = std::move(max_cones);
  if (variables.empty()) {
    for (std::size_t i = 0; i < fan.rays_.size(); ++i) variables.push_back("x" + std::to_string(i));
  }
  fan.variables_ = std::move(variables);

  const bool rays_ok = std::all_of(fan.rays_.begin(), fan.rays_.end(), [dim](const IntVec& v) { return v.size() == dim; });
  std::set<Cone, bool (*)(const Cone&, const Cone&)> all([](const Cone& a, const Cone& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  if (rays_ok) {
    for (const auto& c : fan.max_cones_) {
      if (!indices_valid(c, fan.rays_.size())) continue;
      for (std::size_t k = 0; k <= c.size(); ++k) for_each_subset(c, k, [&](const Cone& s) { all.insert(s); });
    }
  }
  fan.cones_.assign(all.begin(), all.end());
  for (const auto& c : fan.cones_) {
    std::vector<IntVec> normals;
    for (int i : c) normals.push_back(fan.rays_[i]);
    fan.frames_.push_back(std::make_shared<const ConeFrame>(c, std::move(normals), dim));
  }
  std::set<std::size_t> max_idx;
  for (const auto& c : fan.max_cones_)
    if (auto i = fan.index_of(c)) max_idx.insert(*i);
  fan.max_idx_.assign(max_idx.begin(), max_idx.end());
  return fan;
}

std::optional<std::size_t> Fan::index_of(const Cone& c) const {
  Cone sorted = c;
  std::sort(sorted.begin(), sorted.end());
  auto it = std::lower_bound(cones_.begin(), cones_.end(), sorted, [](const Cone& a, const Cone& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  if (it == cones_.end() || *it != sorted) return std::nullopt;
  return static_cast<std::size_t>(it - cones_.begin());
}

std::shared_ptr<const ConeFrame> Fan::frame_of(const Cone& c) const {
  auto i = index_of(c);
  if (!i) throw InputError("cone " + cone_str(c) + " is not in the fan");
  return frames_[*i];
}

bool Fan::same_as(const Fan& other) const {
  return dim_ == other.dim_ && rays_ == other.rays_ && max_cones_ == other.max_cones_;
}

std::vector<FanViolation> validate_fan(const Fan& fan) {
  using K = FanViolation::Kind;
  std::vector<FanViolation> out;
  const std::size_t n = fan.dim();
  const std::size_t r = fan.num_rays();
  if (n == 0) out.push_back({K::kBadDimension, "dimension must be positive"});

  for (std::size_t i = 0; i < r; ++i) {
    const IntVec& v = fan.ray(i);
    if (v.size() != n) {
      out.push_back({K::kBadDimension, "ray " + std::to_string(i) + " has " + std::to_string(v.size()) +
                                           " entries, expected " + std::to_string(n)});
      continue;
    }
    Int g = 0;
    for (Int x : v) g = std::gcd(g, x);
    if (g == 0)
      out.push_back({K::kZeroRay, "ray " + std::to_string(i) + " is zero"});
    else if (g != 1)
      out.push_back({K::kNonPrimitiveRay, "ray " + std::to_string(i) + " " + to_string(v) + " is not primitive (gcd " +
                                              std::to_string(g) + ")"});
  }
  if (!out.empty()) return out;

  if (fan.max_cones().empty()) out.push_back({K::kWrongConeSize, "fan has no maximal cones"});
  bool cones_ok = true;
  for (const auto& c : fan.max_cones()) {
    if (!indices_valid(c, r)) {
      out.push_back({K::kBadConeIndex, "cone " + cone_str(c) + " references a nonexistent ray"});
      cones_ok = false;
      continue;
    }
    if (std::adjacent_find(c.begin(), c.end()) != c.end()) {
      out.push_back({K::kBadConeIndex, "cone " + cone_str(c) + " repeats a ray"});
      cones_ok = false;
      continue;
    }
    if (c.size() != n) {
      out.push_back({K::kWrongConeSize, "maximal cone " + cone_str(c) + " has " + std::to_string(c.size()) +
                                            " rays, expected " + std::to_string(n)});
      cones_ok = false;
      continue;
    }
    if (!fan.frame_of(c)->unimodular()) {
      out.push_back({K::kNonUnimodularCone, "maximal cone " + cone_str(c) + " is not unimodular"});
      cones_ok = false;
    }
  }
  for (std::size_t a = 0; a < fan.max_cones().size(); ++a)
    for (std::size_t b = 0; b < fan.max_cones().size(); ++b) {
      if (a == b) continue;
      const Cone& ca = fan.max_cones()[a];
      const Cone& cb = fan.max_cones()[b];
      if (std::includes(cb.begin(), cb.end(), ca.begin(), ca.end()) && (ca != cb || a < b))
        out.push_back({K::kFaceClosure, "maximal cone " + cone_str(ca) + " is a face of (or equal to) " + cone_str(cb)});
    }
  std::set<int> used;
  for (const auto& c : fan.max_cones()) used.insert(c.begin(), c.end());
  for (std::size_t i = 0; i < r; ++i)
    if (!used.count(static_cast<int>(i)))
      out.push_back({K::kFaceClosure, "ray " + std::to_string(i) + " lies in no maximal cone"});
  if (!cones_ok || !out.empty()) return out;

  // Every facet lies in exactly two maximal cones, one on each side.
  std::map<Cone, std::vector<std::size_t>> facets;
  for (std::size_t a = 0; a < fan.max_cones().size(); ++a)
    for_each_subset(fan.max_cones()[a], n - 1, [&](const Cone& f) { facets[f].push_back(a); });
  for (const auto& [f, owners] : facets) {
    if (owners.size() != 2) {
      out.push_back({K::kFacetNotShared, "facet " + cone_str(f) + " lies in " + std::to_string(owners.size()) +
                                             " maximal cones, expected 2"});
      continue;
    }
    const Cone& ca = fan.max_cones()[owners[0]];
    const Cone& cb = fan.max_cones()[owners[1]];
    int missing_a = -1, missing_b = -1;
    for (int i : ca)
      if (!std::binary_search(f.begin(), f.end(), i)) missing_a = i;
    for (int i : cb)
      if (!std::binary_search(f.begin(), f.end(), i)) missing_b = i;
    // Dual vector of ca that vanishes on the facet and is 1 on missing_a.
    auto frame = fan.frame_of(ca);
    IntVec p(n, 0);
    p[std::find(ca.begin(), ca.end(), missing_a) - ca.begin()] = 1;
    const Character normal = frame->from_dual(p);
    if (dot(normal.coords, fan.ray(missing_b)) >= 0)
      out.push_back({K::kOverlappingCones, "cones " + cone_str(ca) + " and " + cone_str(cb) +
                                               " lie on the same side of their common facet " + cone_str(f)});
  }
  if (!out.empty()) return out;

  // A closed, consistently glued cone complex covers R^n some number of
  // times; check a generic point of the first cone is covered exactly once.
  const Cone& first = fan.max_cones()[0];
  IntVec point(n, 0);
  Int weight = 1;
  for (int i : first) {
    for (std::size_t k = 0; k < n; ++k) point[k] = checked_add(point[k], checked_mul(weight, fan.ray(i)[k]));
    weight = checked_add(checked_mul(weight, 7), 3);
  }
  for (std::size_t a = 1; a < fan.max_cones().size(); ++a) {
    auto frame = fan.frame_of(fan.max_cones()[a]);
    bool inside = true;
    for (std::size_t k = 0; k < n && inside; ++k) {
      IntVec e(n, 0);
      e[k] = 1;
      if (dot(frame->from_dual(e).coords, point) <= 0) inside = false;
    }
    if (inside)
      out.push_back({K::kOverlappingCones, "maximal cones " + cone_str(first) + " and " + cone_str(fan.max_cones()[a]) +
                                               " overlap"});
  }
  return out;
}

ClassDegree CoxGrading::degree(const IntVec& v) const {
  if (v.size() != r) throw InputError("vector of length " + std::to_string(v.size()) + " where " + std::to_string(r) +
                                      " entries were expected");
  return ClassDegree(linalg::apply(deg_matrix, v));
}

ClassDegree CoxGrading::variable_degree(std::size_t i) const {
  IntVec out(ell);
  for (std::size_t k = 0; k < ell; ++k) out[k] = deg_matrix[k][i];
  return ClassDegree(std::move(out));
}

Divisor CoxGrading::canonical_lift(const ClassDegree& u) const {
  if (u.size() != ell) throw InputError("degree " + to_string(u.coords) + " has the wrong length");
  IntVec d(r, 0);
  for (std::size_t k = 0; k < ell; ++k) d[basis_rays[k]] = u[k];
  return Divisor(std::move(d));
}

CoxGrading compute_grading(const Fan& fan) {
  const std::size_t n = fan.dim();
  const std::size_t r = fan.num_rays();
  if (r < n) throw InvalidFan("fewer rays than the dimension");
  linalg::Echelon e = linalg::row_echelon(linalg::to_big(fan.rays()));
  if (e.pivot_cols.size() != n) throw InvalidFan("rays do not span the lattice");
  for (std::size_t i = 0; i < n; ++i)
    if (e.echelon[i][e.pivot_cols[i]] != 1) throw InvalidFan("class group has torsion");

  CoxGrading g;
  g.r = r;
  g.ell = r - n;
  linalg::IntMatrix pi;
  for (std::size_t i = n; i < r; ++i) {
    IntVec row;
    for (const auto& v : e.transform[i]) row.push_back(to_int(v));
    pi.push_back(std::move(row));
  }
  if (g.ell == 0) {
    g.deg_matrix = {};
    return g;
  }

  Cone all(r);
  std::iota(all.begin(), all.end(), 0);
  std::optional<linalg::IntMatrix> inverse;
  for_each_subset(all, g.ell, [&](const Cone& s) {
    if (inverse) return;
    linalg::IntMatrix sub(g.ell, IntVec(g.ell));
    for (std::size_t k = 0; k < g.ell; ++k)
      for (std::size_t j = 0; j < g.ell; ++j) sub[k][j] = pi[k][s[j]];
    if (auto inv = linalg::unimodular_inverse(sub)) {
      inverse = std::move(inv);
      g.basis_rays = s;
    }
  });
  if (!inverse) throw InvalidFan("no unimodular basis for the class group");
  g.deg_matrix.assign(g.ell, IntVec(r, 0));
  for (std::size_t j = 0; j < r; ++j) {
    IntVec col(g.ell);
    for (std::size_t k = 0; k < g.ell; ++k) col[k] = pi[k][j];
    IntVec nc = linalg::apply(*inverse, col);
    for (std::size_t k = 0; k < g.ell; ++k) g.deg_matrix[k][j] = nc[k];
  }
  return g;
}

ToricVariety ToricVariety::create(Fan fan) {
  auto violations = validate_fan(fan);
  if (!violations.empty()) {
    std::string msg = "invalid fan:";
    for (const auto& v : violations) msg += "\n  " + v.message;
    throw InvalidFan(msg);
  }
  CoxGrading g = compute_grading(fan);
  return ToricVariety(std::move(fan), std::move(g));
}

std::vector<Monomial> irrelevant_generators(const Fan& fan) {
  std::vector<Monomial> out;
  for (const auto& c : fan.max_cones()) {
    IntVec e(fan.num_rays(), 1);
    for (int i : c) e[i] = 0;
    out.emplace_back(std::move(e));
  }
  return out;
}

Character tau_for_cone(const Fan& fan, std::size_t max_cone, const Divisor& d) {
  const Cone& c = fan.max_cones().at(max_cone);
  IntVec p;
  for (int i : c) p.push_back(d.coeffs.at(i));
  return fan.frame_of(c)->from_dual(p);
}

IntVec phi(const Fan& fan, const Character& m) {
  IntVec out(fan.num_rays());
  for (std::size_t i = 0; i < fan.num_rays(); ++i) out[i] = dot(m.coords, fan.ray(i));
  return out;
}

std::optional<Character> phi_preimage(const Fan& fan, const IntVec& v) {
  if (fan.max_cones().empty()) return std::nullopt;
  Character m = tau_for_cone(fan, 0, Divisor(v));
  if (phi(fan, m) != v) return std::nullopt;
  return m;
}

Fan projective_space(std::size_t n) {
  if (n == 0) throw InputError("projective space needs n >= 1");
  std::vector<IntVec> rays;
  rays.emplace_back(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    rays.push_back(std::move(e));
  }
  std::vector<Cone> cones;
  for (std::size_t skip = 0; skip <= n; ++skip) {
    Cone c;
    for (std::size_t i = 0; i <= n; ++i)
      if (i != skip) c.push_back(static_cast<int>(i));
    cones.push_back(std::move(c));
  }
  return Fan::from_maximal(n, std::move(rays), std::move(cones));
}

Fan hirzebruch(Int a) {
  if (a < 0) throw InputError("Hirzebruch surface needs a >= 0");
  std::vector<IntVec> rays = {{-1, a}, {1, 0}, {0, -1}, {0, 1}};
  std::vector<Cone> cones = {{1, 3}, {1, 2}, {0, 3}, {0, 2}};
  return Fan::from_maximal(2, std::move(rays), std::move(cones), {"x0", "x1", "y0", "y1"});
}

Fan product_of_projective_spaces(std::size_t n, std::size_t m) {
  Fan a = projective_space(n);
  Fan b = projective_space(m);
  std::vector<IntVec> rays;
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < a.num_rays(); ++i) {
    IntVec v = a.ray(i);
    v.resize(n + m, 0);
    rays.push_back(std::move(v));
    vars.push_back("x" + std::to_string(i));
  }
  for (std::size_t i = 0; i < b.num_rays(); ++i) {
    IntVec v(n, 0);
    v.insert(v.end(), b.ray(i).begin(), b.ray(i).end());
    rays.push_back(std::move(v));
    vars.push_back("y" + std::to_string(i));
  }
  std::vector<Cone> cones;
  const int shift = static_cast<int>(a.num_rays());
  for (const auto& ca : a.max_cones())
    for (const auto& cb : b.max_cones()) {
      Cone c = ca;
      for (int i : cb) c.push_back(i + shift);
      cones.push_back(std::move(c));
    }
  return Fan::from_maximal(n + m, std::move(rays), std::move(cones), std::move(vars));
}

namespace {

std::optional<Int> parse_int(std::string_view s) {
  if (s.empty()) return std::nullopt;
  Int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

Fan catalog_fan(std::string_view name) {
  auto bad = [&] { return InputError("unknown catalog fan '" + std::string(name) + "'"); };
  if (name.size() < 2) throw bad();
  if (name[0] == 'H') {
    auto a = parse_int(name.substr(1));
    if (!a || *a < 0) throw bad();
    return hirzebruch(*a);
  }
  if (name[0] != 'P') throw bad();
  auto x = name.find('x');
  if (x == std::string_view::npos) {
    auto n = parse_int(name.substr(1));
    if (!n || *n < 1) throw bad();
    return projective_space(static_cast<std::size_t>(*n));
  }
  auto n = parse_int(name.substr(1, x - 1));
  if (x + 1 >= name.size() || name[x + 1] != 'P') throw bad();
  auto m = parse_int(name.substr(x + 2));
  if (!n || !m || *n < 1 || *m < 1) throw bad();
  return product_of_projective_spaces(static_cast<std::size_t>(*n), static_cast<std::size_t>(*m));
}

}  // namespace klyachko
