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

#include "klyachko/integer.hpp"
#include "klyachko/types.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace klyachko {

/// The rays of one cone together with the data needed to evaluate the
/// functionals <m, n(rho)> and, for maximal cones of a smooth fan, to go
/// back from dual-basis coordinates to M.
class ConeFrame {
 public:
  ConeFrame(Cone rays, std::vector<IntVec> normals, std::size_t dim);

  const Cone& rays() const { return rays_; }
  const std::vector<IntVec>& normals() const { return normals_; }
  std::size_t dim() const { return dim_; }
  std::size_t size() const { return rays_.size(); }

  /// True when the cone's ray generators form a Z-basis of N.
  bool unimodular() const { return inverse_.has_value(); }

  /// Pairings <m, n(rho)> for the rays of this cone, in ray order.
  IntVec pairings(const Character& m) const;

  /// The character with the given pairings. Requires unimodular().
  Character from_dual(const IntVec& p) const;

  /// Coefficients c with <from_dual(p), v> = c . p for all p, i.e. v written
  /// in the basis of ray generators. Requires unimodular().
  IntVec express(const IntVec& v) const;

  /// Structural equality: same ray indices and ray vectors.
  bool same_as(const ConeFrame& other) const;

 private:
  Cone rays_;
  std::vector<IntVec> normals_;
  std::size_t dim_;
  std::optional<std::vector<IntVec>> inverse_;
};

/// A fan given by its maximal cones; the face poset is computed.
class Fan {
 public:
  static Fan from_maximal(std::size_t dim, std::vector<IntVec> rays, std::vector<Cone> max_cones,
                          std::vector<std::string> variables = {});

  std::size_t dim() const { return dim_; }
  std::size_t num_rays() const { return rays_.size(); }
  const IntVec& ray(std::size_t i) const { return rays_[i]; }
  const std::vector<IntVec>& rays() const { return rays_; }

  /// All cones (including the zero cone), ordered by dimension then
  /// lexicographically.
  const std::vector<Cone>& cones() const { return cones_; }
  const std::vector<std::size_t>& max_cone_indices() const { return max_idx_; }
  /// Maximal cones in input order.
  const std::vector<Cone>& max_cones() const { return max_cones_; }

  std::optional<std::size_t> index_of(const Cone& c) const;
  std::shared_ptr<const ConeFrame> frame(std::size_t cone_index) const { return frames_[cone_index]; }
  std::shared_ptr<const ConeFrame> frame_of(const Cone& c) const;

  const std::vector<std::string>& variables() const { return variables_; }

  /// Structural equality of the ray data and maximal cones.
  bool same_as(const Fan& other) const;

 private:
  std::size_t dim_ = 0;
  std::vector<IntVec> rays_;
  std::vector<Cone> max_cones_;
  std::vector<Cone> cones_;
  std::vector<std::size_t> max_idx_;
  std::vector<std::shared_ptr<const ConeFrame>> frames_;
  std::vector<std::string> variables_;
};

struct FanViolation {
  enum class Kind {
    kBadDimension,
    kZeroRay,
    kNonPrimitiveRay,
    kBadConeIndex,
    kWrongConeSize,
    kNonUnimodularCone,
    kFaceClosure,
    kFacetNotShared,
    kOverlappingCones,
  };
  Kind kind;
  std::string message;
};

/// Empty result means the fan is smooth and complete.
std::vector<FanViolation> validate_fan(const Fan& fan);

/// pi: Z^r -> Cl(X) = Z^l, normalized so that the columns of basis_rays form
/// the identity matrix.
struct CoxGrading {
  std::size_t r = 0;
  std::size_t ell = 0;
  std::vector<IntVec> deg_matrix;  // ell rows, r columns
  std::vector<int> basis_rays;

  ClassDegree degree(const IntVec& v) const;
  ClassDegree degree(const Monomial& m) const { return degree(m.exps); }
  ClassDegree degree(const Divisor& d) const { return degree(d.coeffs); }
  ClassDegree variable_degree(std::size_t i) const;
  /// The lift with u on basis_rays and zero elsewhere.
  Divisor canonical_lift(const ClassDegree& u) const;
};

CoxGrading compute_grading(const Fan& fan);

/// Validated fan bundled with its Cox grading.
class ToricVariety {
 public:
  /// Throws InvalidFan listing every violation.
  static ToricVariety create(Fan fan);

  const Fan& fan() const { return fan_; }
  const CoxGrading& grading() const { return grading_; }
  std::size_t dim() const { return fan_.dim(); }
  std::size_t num_rays() const { return fan_.num_rays(); }

 private:
  ToricVariety(Fan fan, CoxGrading grading) : fan_(std::move(fan)), grading_(std::move(grading)) {}
  Fan fan_;
  CoxGrading grading_;
};

/// Generators x^sigma-hat of the irrelevant ideal, one per maximal cone.
std::vector<Monomial> irrelevant_generators(const Fan& fan);

/// The character tau with <tau, n(rho)> = D_rho for every ray of the maximal
/// cone with index `max_cone` in fan.max_cones().
Character tau_for_cone(const Fan& fan, std::size_t max_cone, const Divisor& d);

/// m with phi(m) = v, if v lies in the image of phi.
std::optional<Character> phi_preimage(const Fan& fan, const IntVec& v);

/// phi(m) = (<m, n(rho)>)_rho.
IntVec phi(const Fan& fan, const Character& m);

/// Built-in fans: "P<n>", "H<a>", "P<n>xP<m>". Throws InputError otherwise.
Fan catalog_fan(std::string_view name);
Fan projective_space(std::size_t n);
Fan hirzebruch(Int a);
Fan product_of_projective_spaces(std::size_t n, std::size_t m);

}  // namespace klyachko
