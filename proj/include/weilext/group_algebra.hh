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
#include <vector>

#include "weilext/hopf.hh"
#include "weilext/linalg.hh"

namespace wx {

// A k[I]-valued linear functional on the group's function ring, given by its
// values on the truncation basis. Values are DualElements without variables.
struct Functional {
  unsigned trunc = 0;  // 0 on exact algebras
  std::vector<DualElement> values;
  bool operator==(const Functional& o) const { return trunc == o.trunc && values == o.values; }
};

// Convolution algebra (u (x) v) o Delta of linear functionals. For finite
// groups the basis is every standard monomial and arithmetic is exact;
// otherwise the basis is the standard monomials of degree <= N and
// functionals are taken to vanish on higher monomials, which is exact for
// functionals supported in degree <= N.
class GroupAlgebra {
 public:
  GroupAlgebra(HopfAlgebra G, unsigned trunc);
  // Throws Error::unsupported when the function ring is not finite over the base.
  static GroupAlgebra exact(HopfAlgebra G);

  const HopfAlgebra& group() const { return d_->G; }
  bool is_exact() const { return d_->exact; }
  unsigned truncation() const { return d_->exact ? 0 : d_->trunc; }
  const std::vector<Mono>& basis() const { return d_->basis; }
  std::size_t size() const { return d_->basis.size(); }
  // Index of a standard monomial in the basis, or -1.
  int index(const Mono& m) const;

  Functional zero() const;
  Functional counit() const;
  // Dual basis functional of basis monomial i (the divided power t^[i] on G_a).
  Functional delta(std::size_t i) const;
  // Evaluation at a point over k[I] given by constant generator values.
  Functional embed_point(const std::vector<DualElement>& g) const;
  Functional embed_point(const std::vector<Coeff>& g) const;
  Functional from_values(std::vector<Coeff> values) const;

  Functional add(const Functional& u, const Functional& v) const;
  Functional scale(const Coeff& c, const Functional& u) const;
  Functional convolve(const Functional& u, const Functional& v) const;
  // u applied to a function (reduced to normal form first).
  DualElement apply(const Functional& u, const Poly& f) const;

  struct Entry {
    std::size_t left, right;
    DualElement c;
  };
  // Sweedler expansion of basis monomial m: sum of c * left (x) right over
  // pairs of basis monomials.
  const std::vector<Entry>& sweedler(std::size_t m) const { return d_->table.at(m); }

  // Left regular representation of u over k. Exact algebras over k only.
  Matrix regular_rep(const Functional& u) const;
  bool is_unit(const Functional& u) const;

 private:
  struct Data {
    HopfAlgebra G;
    unsigned trunc;
    bool exact;
    std::vector<Mono> basis;
    std::vector<std::vector<Entry>> table;  // Sweedler expansion per basis monomial
  };
  GroupAlgebra(HopfAlgebra G, unsigned trunc, bool exact);
  void check_(const Functional& u) const;
  std::shared_ptr<const Data> d_;
};

// The algebra map O_k[G] -> Mat_d(k) induced by a representation of G given
// as a matrix of functions with Delta f_ij = sum_k f_ik (x) f_kj.
class Transport {
 public:
  // Throws Error::domain when f is not a group homomorphism into GL_d.
  Transport(const GroupAlgebra& algebra, std::vector<std::vector<Poly>> f);
  Matrix apply(const Functional& u) const;
  // Multiplicativity on every pair of basis functionals.
  bool verify_multiplicative() const;

 private:
  GroupAlgebra algebra_;
  std::vector<std::vector<Poly>> f_;
};

}  // namespace wx
