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

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "weilext/poly.hh"

namespace wx {

// Commutative square-zero parameters eps_0..eps_{n-1}: a downward closed set
// of allowed squarefree products, all other products vanish. dual(r) is
// k[I] for I of rank r; adding an independent parameter gives k[I][eps'].
class NilShape {
 public:
  static NilShape dual(unsigned rank);
  // Parameters of a followed by those of b; a product is allowed when its
  // two halves are allowed in a and b respectively.
  static NilShape tensor(const NilShape& a, const NilShape& b);

  unsigned nparams() const { return nparams_; }
  const std::vector<std::uint32_t>& masks() const { return masks_; }
  std::size_t size() const { return masks_.size(); }
  // Index of mask in masks(), or -1 when the product vanishes.
  int index(std::uint32_t mask) const;
  bool operator==(const NilShape& o) const { return nparams_ == o.nparams_ && masks_ == o.masks_; }

 private:
  unsigned nparams_ = 0;
  std::vector<std::uint32_t> masks_;  // masks_[0] == 0
};

// Element of R[params] with R a polynomial ring over k: one polynomial per
// allowed mask. Component 0 is the body.
class DualElement {
 public:
  DualElement(NilShape shape, Field f, std::size_t nvars);
  DualElement(NilShape shape, Poly body);
  static DualElement param(NilShape shape, Field f, std::size_t nvars, unsigned j);

  const NilShape& shape() const { return shape_; }
  Field field() const { return parts_[0].field(); }
  std::size_t nvars() const { return parts_[0].nvars(); }
  const Poly& body() const { return parts_[0]; }
  const Poly& part(std::uint32_t mask) const;  // zero when mask is not allowed
  Poly& component(std::size_t idx) { return parts_[idx]; }
  const Poly& component(std::size_t idx) const { return parts_[idx]; }
  void set_part(std::uint32_t mask, Poly p);
  bool is_zero() const;

  DualElement operator+(const DualElement& o) const;
  DualElement operator-(const DualElement& o) const;
  DualElement operator-() const;
  DualElement operator*(const DualElement& o) const;
  DualElement operator*(const Coeff& c) const;
  DualElement operator*(const Poly& c) const;
  DualElement& operator+=(const DualElement& o) { return *this = *this + o; }
  DualElement& operator-=(const DualElement& o) { return *this = *this - o; }
  bool operator==(const DualElement& o) const { return shape_ == o.shape_ && parts_ == o.parts_; }
  bool operator!=(const DualElement& o) const { return !(*this == o); }

  // Same components reindexed into a larger shape whose first parameters
  // are those of this shape.
  DualElement widen(const NilShape& target) const;
  // Apply a map on the underlying polynomials componentwise.
  template <class F>
  DualElement map_parts(F&& f) const {
    DualElement r = *this;
    for (auto& p : r.parts_) p = f(p);
    return r;
  }

  std::string to_string(const std::vector<std::string>& names,
                        const std::vector<std::string>& param_names = {}) const;

 private:
  NilShape shape_;
  std::vector<Poly> parts_;
};

enum class NfStrategy { free_ring, rewrite, groebner };

// Finitely presented commutative algebra over k or over k[I]. Relations are
// DualElements of shape dual(irank); their bodies generate the ideal of the
// special fibre. Normal forms over k[I] use the graded splitting and never
// compute a Groebner basis over k[I].
class PresentedAlgebra {
 public:
  PresentedAlgebra(Field f, std::vector<std::string> gens, std::vector<DualElement> relations,
                   NfStrategy strategy, unsigned irank = 0);
  PresentedAlgebra(Field f, std::vector<std::string> gens, std::vector<Poly> relations,
                   NfStrategy strategy);
  static PresentedAlgebra free(Field f, std::vector<std::string> gens, unsigned irank = 0);

  Field field() const { return field_; }
  unsigned irank() const { return irank_; }
  NilShape base_shape() const { return NilShape::dual(irank_); }
  std::size_t ngens() const { return gens_.size(); }
  const std::vector<std::string>& gens() const { return gens_; }
  const std::vector<DualElement>& relations() const { return relations_; }
  NfStrategy strategy() const { return strategy_; }
  // Basis used for division of bodies: the reduced Groebner basis of the
  // body ideal, or the supplied rewrite rules made monic.
  const std::vector<Poly>& basis() const { return basis_; }
  // True when no relation has an infinitesimal part.
  bool rigid_relations() const { return lifts_.empty(); }

  Poly normal_form(const Poly& p) const;
  // The first irank() parameters of the element's shape are identified
  // with the basis of I.
  DualElement normal_form(const DualElement& e) const;
  bool is_zero(const DualElement& e) const { return normal_form(e).is_zero(); }

  // Same generators and body relations over k.
  PresentedAlgebra special_fibre() const;
  // m-fold tensor product over the base; copy c has generators suffixed "_c".
  PresentedAlgebra tensor_power(unsigned m) const;
  // Tensor product over the base with o's generators placed after ours.
  PresentedAlgebra tensor(const PresentedAlgebra& o, std::vector<std::string> names) const;

  Poly var(std::size_t i) const { return Poly::variable(field_, ngens(), i); }
  Poly parse(const std::string& text) const { return Poly::parse(text, gens_, field_); }

 private:
  void setup_();
  Field field_;
  unsigned irank_;
  std::vector<std::string> gens_;
  std::vector<DualElement> relations_;
  NfStrategy strategy_;
  std::vector<Poly> basis_;
  std::vector<DualElement> lifts_;  // monic relations matching basis_, when not rigid
};

// Evaluate f at images (all of one shape, in the target's ring) and reduce in
// the target. When f itself is a DualElement of shape dual(r), its
// parameters are read as the first r parameters of the images' shape.
DualElement substitute(const Poly& f, std::span<const DualElement> images,
                       const PresentedAlgebra& target);
DualElement substitute(const DualElement& f, std::span<const DualElement> images,
                       const PresentedAlgebra& target);
// Constant lift of p into shape.
DualElement lift(const Poly& p, const NilShape& shape);

// A k[I]-algebra map A -> R[I] given on generators, with optional recorded
// images of the basis of I.
struct DualMap {
  std::vector<DualElement> gen_images;
  std::vector<DualElement> eps_images;
};

struct DualSplit {
  std::vector<Poly> bar;                 // k-algebra map A/IA -> R on generators
  std::vector<std::vector<Poly>> parts;  // parts[j][g]: eps_j component of v(g)
};

// f = bar + v with v I-compatible. Throws Error::Kind::domain when f does
// not fix I or does not kill the relations of the source.
DualSplit dual_split(const DualMap& f, const PresentedAlgebra& source, const PresentedAlgebra& target);
std::vector<DualElement> dual_join(const DualSplit& s, unsigned rank);

}  // namespace wx
