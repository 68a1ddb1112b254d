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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "weilext/algebra.hh"
#include "weilext/linalg.hh"

namespace wx {

// A point of a group with values in R[params]: one image per generator, all
// of the same shape. The first irank parameters of the shape are I.
using Point = std::vector<DualElement>;

struct HopfReport {
  bool relations_preserved = false;
  bool coassociative = false;
  bool counital = false;
  bool antipode = false;
  bool all() const { return relations_preserved && coassociative && counital && antipode; }
};

// Finitely presented Hopf algebra over k or k[I]. Comultiplication images
// live in A (x) A with the second factor's generators after the first's;
// counit images are constants; antipode images live in A. Immutable and
// cheap to copy.
class HopfAlgebra {
 public:
  HopfAlgebra(std::string name, PresentedAlgebra algebra, std::vector<DualElement> comul,
              std::vector<DualElement> counit, std::vector<DualElement> antipode);

  const std::string& name() const { return d_->name; }
  const PresentedAlgebra& algebra() const { return d_->algebra; }
  const PresentedAlgebra& square() const { return d_->square; }
  const PresentedAlgebra& cube() const { return d_->cube; }
  Field field() const { return d_->algebra.field(); }
  unsigned irank() const { return d_->algebra.irank(); }
  std::size_t ngens() const { return d_->algebra.ngens(); }
  const std::vector<std::string>& gens() const { return d_->algebra.gens(); }
  const std::vector<DualElement>& comul() const { return d_->comul; }
  const std::vector<DualElement>& counit() const { return d_->counit; }
  const std::vector<DualElement>& antipode() const { return d_->antipode; }
  // Catalog smoothness marker; absent when not known.
  std::optional<bool> smooth() const { return d_->smooth; }
  HopfAlgebra with_smooth(std::optional<bool> s) const;
  HopfAlgebra renamed(std::string name) const;

  Point identity(const NilShape& shape, const PresentedAlgebra& R) const;
  Point multiply(const Point& g, const Point& h, const PresentedAlgebra& R) const;
  Point inverse(const Point& g, const PresentedAlgebra& R) const;
  Point conjugate(const Point& g, const Point& h, const PresentedAlgebra& R) const;  // g h g^-1
  bool is_point(const Point& g, const PresentedAlgebra& R) const;

  // Reduction modulo I, and base change k -> k[I] of a group over k.
  HopfAlgebra special_fibre() const;
  HopfAlgebra base_change(unsigned rank) const;

 private:
  struct Data {
    std::string name;
    PresentedAlgebra algebra, square, cube;
    std::vector<DualElement> comul, counit, antipode;
    std::optional<bool> smooth;
  };
  explicit HopfAlgebra(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

// Generators offset..offset+n-1 of R as a point of the given shape.
Point universal_point(const NilShape& shape, const PresentedAlgebra& R, std::size_t offset, std::size_t n);
// Constant k[I] values (no variables) placed into R[shape].
DualElement constant_in(const DualElement& c, const NilShape& shape, const PresentedAlgebra& R);
bool points_equal(const Point& a, const Point& b, const PresentedAlgebra& R);

HopfReport verify_hopf(const HopfAlgebra& G);

// Componentwise product; H's generators are suffixed on a name collision.
HopfAlgebra product_group(const HopfAlgebra& G, const HopfAlgebra& H);

// A homomorphism X -> Y given by its comorphism: images in O(X) of the
// generators of O(Y), as DualElements of X's base shape.
Point map_point(const std::vector<DualElement>& comorphism, const Point& x, const PresentedAlgebra& R);
// Relations of Y are killed and the map commutes with the group laws and units.
bool is_homomorphism(const HopfAlgebra& X, const HopfAlgebra& Y, const std::vector<DualElement>& comorphism);
// Both composites are the identity on generators.
bool are_inverse(const HopfAlgebra& X, const HopfAlgebra& Y, const std::vector<DualElement>& x_to_y,
                 const std::vector<DualElement>& y_to_x);

// Lie(G, I) for G over k and I free of rank r. Lie G is the kernel of the
// Jacobian of the relations at the identity; coordinates of Lie(G, I) are
// ordered (Lie basis index, eps index) lexicographically.
class LieModule {
 public:
  LieModule(HopfAlgebra G, unsigned rank);

  const HopfAlgebra& group() const { return G_; }
  unsigned rank() const { return rank_; }
  std::size_t lie_dim() const { return basis_.size(); }
  std::size_t dim() const { return basis_.size() * rank_; }
  // basis()[b][g]: value of the b-th derivation on generator g.
  const std::vector<std::vector<Coeff>>& basis() const { return basis_; }
  // Generator whose value is the b-th coordinate.
  const std::vector<std::size_t>& coordinate_gens() const { return coord_gens_; }

  // Values on generators, per eps index, of the element with coordinates c.
  std::vector<std::vector<Poly>> values(const std::vector<Poly>& coords, const PresentedAlgebra& R) const;
  // Coordinates of values on generators; throws when they are not a derivation at e.
  std::vector<Poly> coordinates(const std::vector<std::vector<Poly>>& values, const PresentedAlgebra& R) const;
  bool is_derivation(const std::vector<std::vector<Poly>>& values, const PresentedAlgebra& R) const;

  // exp(x) = e + x as a point of G over R[shape]; shape's first rank() parameters are I.
  Point exp(const std::vector<Poly>& coords, const NilShape& shape, const PresentedAlgebra& R) const;
  Point exp_values(const std::vector<std::vector<Poly>>& values, const NilShape& shape, const PresentedAlgebra& R) const;
  // Inverse of exp on points of the form e + I-part; throws otherwise.
  std::vector<Poly> log(const Point& p, const PresentedAlgebra& R) const;

  // Ad(g)x for a k-point g of G over R.
  std::vector<Poly> adjoint_apply(const std::vector<Poly>& g, const std::vector<Poly>& coords,
                                  const PresentedAlgebra& R) const;
  // Matrix of Ad(g) at the universal point, entries in A, size dim x dim.
  std::vector<std::vector<Poly>> adjoint_matrix() const;
  // Convolution commutator of two Lie G elements (rank one coordinates) over R.
  std::vector<Poly> bracket(const std::vector<Poly>& x, const std::vector<Poly>& y, const PresentedAlgebra& R) const;

 private:
  HopfAlgebra G_;
  unsigned rank_;
  std::vector<std::vector<Coeff>> basis_;
  std::vector<std::size_t> coord_gens_;
  std::vector<Poly> identity_;  // counit values
};

}  // namespace wx
