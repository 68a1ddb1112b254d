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

#include "weilext/hopf.hh"
#include "weilext/weil.hh"

namespace wx {

// Maps into Lie(G, I) stored by Lie coordinates, ordered (Lie basis index,
// eps index) as in LieModule. A 1-cochain has coordinates in A, a 2-cochain
// in A (x) A. Both are kept in normal form, so == is equality of maps.
class Cochain1 {
 public:
  // Throws Error::domain unless phi(e) = 0.
  Cochain1(HopfAlgebra G, unsigned rank, std::vector<Poly> coords);
  static Cochain1 zero(HopfAlgebra G, unsigned rank);

  const HopfAlgebra& group() const { return G_; }
  unsigned rank() const { return rank_; }
  const std::vector<Poly>& coords() const { return coords_; }
  // phi at a k-point g of G over R, as Lie coordinates in R.
  std::vector<Poly> evaluate(const std::vector<Poly>& g, const PresentedAlgebra& R) const;

  Cochain1 operator+(const Cochain1& o) const;
  Cochain1 operator-() const;
  Cochain1 operator-(const Cochain1& o) const { return *this + (-o); }
  Cochain1 operator*(const Coeff& c) const;
  bool operator==(const Cochain1& o) const { return coords_ == o.coords_; }

 private:
  HopfAlgebra G_;
  unsigned rank_;
  std::vector<Poly> coords_;
};

class Cocycle2 {
 public:
  // Any 2-cochain; check_cocycle decides whether it is a normalized cocycle.
  Cocycle2(HopfAlgebra G, unsigned rank, std::vector<Poly> coords);
  static Cocycle2 zero(HopfAlgebra G, unsigned rank);

  const HopfAlgebra& group() const { return G_; }
  unsigned rank() const { return rank_; }
  const std::vector<Poly>& coords() const { return coords_; }
  // Values on generators per eps index: C(x_g) in I (x) A (x) A.
  std::vector<std::vector<Poly>> values() const;
  std::vector<Poly> evaluate(const std::vector<Poly>& u, const std::vector<Poly>& v, const PresentedAlgebra& R) const;
  bool is_zero() const;

  Cocycle2 operator+(const Cocycle2& o) const;
  Cocycle2 operator-() const;
  Cocycle2 operator-(const Cocycle2& o) const { return *this + (-o); }
  Cocycle2 operator*(const Coeff& c) const;
  bool operator==(const Cocycle2& o) const { return coords_ == o.coords_; }
  bool operator!=(const Cocycle2& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  HopfAlgebra G_;
  unsigned rank_;
  std::vector<Poly> coords_;
};

// c(u,v) + c(uv,w) = Ad(u)c(v,w) + c(u,vw) on the universal triple, and
// c(e,v) = c(u,e) = 0.
bool check_cocycle(const Cocycle2& c);
// d phi(u,v) = phi(uv) - phi(u) - Ad(u)phi(v).
Cocycle2 coboundary(const Cochain1& phi);
// Whether u.v = exp(c(u,v))uv is associative on universal points over k[I].
// Agrees with check_cocycle for normalized c.
bool odot_associative(const Cocycle2& c);

// sum over 0 < i < p of binom(p, i)/p x^i y^(p-i), over F_p, in nvars
// variables with x and y at the given positions.
Poly witt_carry(Field f, std::size_t nvars, std::size_t x, std::size_t y);

// E_c = Lie(G, I) x G with (x, g)(x', g') = (x + Ad(g)x' + c(g, g'), gg').
// Generators are the Lie coordinates l1..ld followed by those of G.
class ExtensionObj {
 public:
  const Cocycle2& cocycle() const { return c_; }
  const HopfAlgebra& base() const { return c_.group(); }
  const HopfAlgebra& group() const { return E_; }
  std::size_t lie_dim() const { return dim_; }

  // Lie(G, I) as a vector group on l1..ld and the comorphisms of
  // Lie(G, I) -> E_c -> G, plus the scheme section g -> (0, g).
  HopfAlgebra kernel() const;
  std::vector<DualElement> inclusion() const;
  std::vector<DualElement> projection() const;
  std::vector<DualElement> section() const;

 private:
  friend ExtensionObj build_extension(const Cocycle2& c);
  ExtensionObj(Cocycle2 c, HopfAlgebra E, std::size_t dim) : c_(std::move(c)), E_(std::move(E)), dim_(dim) {}
  Cocycle2 c_;
  HopfAlgebra E_;
  std::size_t dim_;
};

// Throws Error::domain when c is not a normalized cocycle.
ExtensionObj build_extension(const Cocycle2& c);

// A group over k[I] with base G = its special fibre and a rigidification:
// images of its generators in O(h*G) = A[I] lifting the identity.
class Deformation {
 public:
  // Validates the rigidification: bodies are the generators, relations are
  // killed and the unit is preserved. Throws Error::domain otherwise.
  static Deformation rigidified(HopfAlgebra group, std::vector<DualElement> sigma);

  const HopfAlgebra& group() const { return group_; }
  const HopfAlgebra& base() const { return base_; }
  unsigned rank() const { return group_.irank(); }
  const std::vector<DualElement>& rigidification() const { return sigma_; }
  // Set when built by deform.
  const std::optional<Cocycle2>& cocycle() const { return cocycle_; }

 private:
  friend Deformation deform(const Cocycle2& c);
  Deformation(HopfAlgebra group, HopfAlgebra base, std::vector<DualElement> sigma, std::optional<Cocycle2> c)
      : group_(std::move(group)), base_(std::move(base)), sigma_(std::move(sigma)), cocycle_(std::move(c)) {}
  HopfAlgebra group_;
  HopfAlgebra base_;
  std::vector<DualElement> sigma_;
  std::optional<Cocycle2> cocycle_;
};

// G_c over k[I] on the generators of A with Delta_c(a) = a(exp(c(u,v)) uv)
// and S_c(u) = S(u) exp(-c(u, S(u))); the rigidification is the identity.
// Throws Error::domain when c is not a normalized cocycle.
Deformation deform(const Cocycle2& c);
// The identity as rigidification of A[I].
std::vector<DualElement> identity_rigidification(const HopfAlgebra& G, unsigned rank);

// log((u.v) (uv)^-1) where u.v = sigma^-1(sigma(u) sigma(v)). Throws
// Error::domain when the transported law is not an infinitesimal left
// translation of the law of G.
Cocycle2 extract_cocycle(const Deformation& D);

// h_* of a rigidified deformation as an extension of G by Lie(G, I).
struct WeilExtension {
  WeilRestriction restriction;
  // g -> sigma(g) as a scheme section G -> h_* G_c (images of h_* generators in A).
  std::vector<DualElement> section;
  Cocycle2 cocycle;  // s(g) s(g') s(gg')^-1 read in Lie(G, I)
  ExtensionObj extension;
  // (x, g) -> exp(x) s(g) as E_c -> h_* G_c, and its inverse.
  std::vector<DualElement> to_restriction;
  std::vector<DualElement> from_restriction;
};
// Throws Error::domain for a non-rigid group: its relations do not hold at
// any rigidification, as for the kernel of x -> x^p - eps x.
WeilExtension extension_of(const Deformation& D);

Deformation weil_extend(const ExtensionObj& E);

// Whether a point (x, g) of h* E_c over the k[I]-algebra R has g = exp(lambda x).
bool k_lambda_member(const ExtensionObj& E, const Point& p, const Coeff& lambda, const PresentedAlgebra& R);

// Throw Error::domain when the bases or ranks differ.
ExtensionObj baer_sum(const ExtensionObj& a, const ExtensionObj& b);
ExtensionObj scalar_mul(const Coeff& lambda, const ExtensionObj& E);
Deformation scale_deformation(const Coeff& lambda, const Deformation& D);
Deformation sum_deformations(const Deformation& a, const Deformation& b);

// f(x, g) = (x + phi(g), g) as a comorphism O(target) -> O(source). Needs
// d phi = c_target - c_source; throws Error::domain otherwise.
std::vector<DualElement> morphism_from_cochain(const Cochain1& phi, const ExtensionObj& source,
                                               const ExtensionObj& target);

// A normalized phi with d phi = target among cochains whose coordinates are
// combinations of standard monomials of degree <= degree. Nothing means none
// exists in that space, not that target is cohomologically nontrivial.
std::optional<Cochain1> solve_coboundary(const Cocycle2& target, unsigned degree);
inline std::optional<Cochain1> cohomologous(const Cocycle2& c, const Cocycle2& c2, unsigned degree) {
  return solve_coboundary(c2 - c, degree);
}

}  // namespace wx
