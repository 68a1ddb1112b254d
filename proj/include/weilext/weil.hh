// Copyright 2026 The weilext Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <vector>

#include "weilext/group_algebra.hh"
#include "weilext/hopf.hh"

namespace wx {

// h_* of a group over k[I]: each generator x of the source splits as
// x_0 + eps_1 x_1 + ... + eps_r x_r and every structure map and relation is
// cut into its I-graded components. The result lives over k with generators
// grouped by source generator.
class WeilRestriction {
 public:
  explicit WeilRestriction(HopfAlgebra source);

  const HopfAlgebra& source() const { return source_; }
  const HopfAlgebra& result() const { return result_; }
  unsigned rank() const { return source_.irank(); }
  std::size_t index(std::size_t gen, unsigned part) const { return gen * (rank() + 1) + part; }

  // The universal split point x_0 + sum eps_j x_j in ring R whose generators
  // start at offset with the result's layout.
  Point split_point(const PresentedAlgebra& R, std::size_t offset) const;
  // Components of a source function at the split point of the free ring on
  // the result's generators.
  std::vector<Poly> split(const DualElement& f) const;

  // pi: E -> G_k as a comorphism (x -> x_0).
  std::vector<DualElement> projection() const;
  // An R[I]-point of the source as an R-point of E, and back.
  Point to_result(const Point& p, const PresentedAlgebra& R) const;
  Point from_result(const Point& y, const PresentedAlgebra& R) const;

 private:
  HopfAlgebra source_;
  HopfAlgebra result_;
};

// h_* of a homomorphism u: G -> G' of k[I]-groups (comorphism images of the
// generators of G' in O(G)), as a comorphism E' -> E.
std::vector<DualElement> weil_restrict_morphism(const WeilRestriction& source, const WeilRestriction& target,
                                                const std::vector<DualElement>& comorphism);

// beta: h*h_*G -> G on points. y is a point of E with values in R[I]; the
// result is y_0 + sum eps_j y_j computed in R[I].
Point beta_apply(const WeilRestriction& w, const Point& y, const PresentedAlgebra& R);
// alpha: X -> h_*h*X for a k-group X: a k-point g goes to the constant point (g, 0).
Point alpha_apply(const WeilRestriction& w, const std::vector<Poly>& g, const PresentedAlgebra& R);

// L(G) = ker(beta) as a closed subscheme of h*h_*G, and its special fibre.
struct KernelL {
  std::vector<DualElement> relations;  // over k[I], in the generators of E
  // The same ideal with y_0 eliminated and bodies in reduced echelon form, so
  // that it is presentable over k[I]. Only for sources with rigid relations.
  std::optional<PresentedAlgebra> presentation;
  PresentedAlgebra special_fibre;      // over k
  // Lie coordinate (b, j) of Lie(G_k, I) is generator lie_generators[b*r+j] of E.
  std::vector<std::size_t> lie_generators;
  std::size_t free_dimension;  // generators minus linear eliminations on the special fibre
};
KernelL kernel_L(const WeilRestriction& w);

// An I-compatible functional v: A -> I (x) R, stored through its values on
// the k-basis {m, eps_j m}: v(m) = sum_j eps_j parts[j][m], v(eps_j m) = eps_j bar[m].
struct ICompatible {
  std::vector<Coeff> bar;
  std::vector<std::vector<Coeff>> parts;
};
// Reads a raw k-linear map given on {m} and {eps_j m}; throws Error::domain
// when it is not I-compatible. on_eps[j][m][i] is the eps_i component of
// v(eps_j m); on_m[m][i] the eps_i component of v(m).
ICompatible make_icompatible(const std::vector<std::vector<Coeff>>& on_m,
                             const std::vector<std::vector<std::vector<Coeff>>>& on_eps);
// (bar v (x) w + v (x) bar w) o Delta. The algebra's group lives over k[I].
ICompatible diamond(const GroupAlgebra& GA, const ICompatible& v, const ICompatible& w);
// The I-compatible part d of the counit: the unit for diamond.
ICompatible diamond_unit(const GroupAlgebra& GA);
// theta: v -> bar v + v as a k[I]-valued functional.
Functional theta(const GroupAlgebra& GA, const ICompatible& v);
ICompatible theta_inverse(const GroupAlgebra& GA, const Functional& u);

}  // namespace wx
