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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weilext/extensions.hh"
#include "weilext/hopf.hh"
#include "weilext/linalg.hh"
#include "weilext/zmod.hh"

namespace wx {

// Element of D = Z/p^N[F, V]/(FV - p) over k = F_p, where D is commutative.
// Stored in the normal form sum_{i>0} a_{-i} V^i + a_0 + sum_{i>0} a_i F^i;
// exponent k > 0 stands for F^k and k < 0 for V^-k.
class DieudonneElt {
 public:
  explicit DieudonneElt(ZModRing ring) : ring_(ring) {}
  static DieudonneElt scalar(ZModRing ring, std::int64_t a);
  static DieudonneElt monomial(ZModRing ring, int exponent, std::int64_t a = 1);
  static DieudonneElt F(ZModRing ring) { return monomial(ring, 1); }
  static DieudonneElt V(ZModRing ring) { return monomial(ring, -1); }
  // Words such as "3 + F*V*F", "V^2*F^2" or "2*(F - p)". Throws Error::parse.
  static DieudonneElt parse(std::string_view text, ZModRing ring);

  const ZModRing& ring() const { return ring_; }
  const std::map<int, std::int64_t>& terms() const { return terms_; }
  std::int64_t coefficient(int exponent) const;
  bool is_zero() const { return terms_.empty(); }

  DieudonneElt operator+(const DieudonneElt& o) const;
  DieudonneElt operator-() const;
  DieudonneElt operator-(const DieudonneElt& o) const { return *this + (-o); }
  DieudonneElt operator*(const DieudonneElt& o) const;
  bool operator==(const DieudonneElt& o) const { return ring_ == o.ring_ && terms_ == o.terms_; }
  bool operator!=(const DieudonneElt& o) const { return !(*this == o); }
  std::string to_string() const;

 private:
  void add_term_(int exponent, std::int64_t a);
  ZModRing ring_;
  std::map<int, std::int64_t> terms_;  // nonzero coefficients only
};

// M / F^{D+1} M for a presented module, as a finite Z/p^N-module on the
// spanning set x^k e_i with -n_i < k <= D, together with the F and V
// matrices (column j is the image of spanning vector j).
struct DWindow {
  FiniteModule module;
  ZMatrix frobenius, verschiebung;
  unsigned fdeg;
  std::vector<std::pair<std::size_t, int>> labels;  // (generator, exponent) per spanning vector

  std::size_t index(std::size_t gen, int exponent) const;
  ZVec act(const DieudonneElt& d, const ZVec& v) const;
};

// Finitely presented module over D with a declared V-nilpotency bound n_i
// for every generator (V^{n_i} e_i = 0 is part of the presentation).
class DModule {
 public:
  DModule(ZModRing ring, std::vector<unsigned> vbounds, std::vector<std::vector<DieudonneElt>> relations = {});
  static DModule d_mod_vn(ZModRing ring, unsigned n);  // D/DV^n
  static DModule alpha_p(ZModRing ring);               // D/(DV + DF)
  static DModule zero(ZModRing ring) { return DModule(ring, {}); }

  const ZModRing& ring() const { return ring_; }
  std::size_t ngens() const { return vbounds_.size(); }
  const std::vector<unsigned>& vbounds() const { return vbounds_; }
  const std::vector<std::vector<DieudonneElt>>& relations() const { return rels_; }
  unsigned max_vbound() const;

  DModule direct_sum(const DModule& o) const;
  DWindow window(unsigned fdeg) const;

 private:
  ZModRing ring_;
  std::vector<unsigned> vbounds_;
  std::vector<std::vector<DieudonneElt>> rels_;
};

// D-linear maps M -> M' inside the window of M', each given by the images
// of the generators of M. generators span the solution group.
struct DHomSpace {
  DWindow target;
  std::vector<std::vector<ZVec>> generators;
  unsigned length;

  bool contains(const std::vector<ZVec>& images) const;
};

DHomSpace hom_d(const DModule& M, const DModule& target, unsigned fdeg);

// L(M) = (M/FM) (x) k[F] from the presentation over (D/DV^n)^t, n the
// largest V-bound: L(D/DV^n) = k^n (x) k[F], L(F) = 0, L(V) = shift,
// L(a) = a mod p on every slot. The module itself is (D/DV)^dim.
struct LieImage {
  DModule module;
  Matrix v_action;  // L of multiplication by V, on the basis of M/FM
  Matrix f_action;  // L of multiplication by F, always zero
  Matrix scalar_action(std::int64_t a) const;
};

LieImage lie_functor(const DModule& M);
// L of a D-linear endomorphism of M given by images of the generators as
// D-combinations of the generators.
Matrix lie_of_endomorphism(const DModule& M, const std::vector<std::vector<DieudonneElt>>& images);

// F injective on M, tested in the window: ker F must sit inside F^D M,
// the layer the truncation kills.
bool is_smooth(const DModule& M, unsigned fdeg);

// Hom(U, W_m) restricted by weight. U must be commutative with a free
// coordinate ring and comultiplication homogeneous for positive weights
// (found automatically). Component c of a homomorphism has weighted
// degree at most p^(fdeg + c). Witt length m is 1 or 2.
class UnipotentModule {
 public:
  const HopfAlgebra& group() const { return U_; }
  unsigned witt_length() const { return m_; }
  unsigned fdeg() const { return fdeg_; }
  const std::vector<unsigned>& weights() const { return weights_; }
  const FiniteModule& module() const { return module_; }
  // Homomorphisms U -> W_m, one per module generator.
  const std::vector<std::vector<Poly>>& generators() const { return gens_; }
  const ZMatrix& verschiebung() const { return V_; }
  const std::vector<std::string>& warnings() const { return warnings_; }
  // Coordinates of a homomorphism. Error::bounds when it lies outside the
  // window, Error::domain when it is not a homomorphism.
  ZVec coordinates(const std::vector<Poly>& hom) const;
  std::vector<Poly> element(const ZVec& coords) const;
  std::vector<Poly> witt_add(const std::vector<Poly>& a, const std::vector<Poly>& b) const;
  std::vector<Poly> witt_neg(const std::vector<Poly>& a) const;

 private:
  friend UnipotentModule dieudonne_of_unipotent(const HopfAlgebra& U, unsigned m, unsigned fdeg,
                                                std::optional<std::vector<unsigned>> weights);
  struct Layer {  // additive homogeneous polynomials of one weight
    unsigned weight;
    std::vector<Mono> monos;
    std::vector<Poly> basis;
  };
  UnipotentModule(HopfAlgebra U, unsigned m, unsigned fdeg);
  std::vector<Coeff> additive_coords_(const Poly& h, unsigned bound) const;
  const Layer* layer_(unsigned weight) const;

  HopfAlgebra U_;
  unsigned m_, fdeg_, p_;
  std::vector<unsigned> weights_;
  std::vector<Layer> layers_;             // weights up to p^(fdeg + m - 1)
  std::vector<std::size_t> layer_start_;  // index of each layer's first basis element
  std::vector<std::vector<Coeff>> lifted_;  // for m = 2: lifted additive maps, in additive coordinates
  std::vector<std::vector<Poly>> gens_;
  FiniteModule module_;
  ZMatrix V_;
  std::vector<Poly> wsum_, wneg_;
  std::vector<std::string> warnings_;
};

// Positive weights making the comultiplication homogeneous: primitive
// coordinates get 1, the others the weight forced by their correction
// terms. Error::unsupported when no such weights exist.
std::vector<unsigned> unipotent_weights(const HopfAlgebra& U);
// Explicit weights replace the automatic ones; they must still make the
// comultiplication homogeneous.
UnipotentModule dieudonne_of_unipotent(const HopfAlgebra& U, unsigned m, unsigned fdeg,
                                       std::optional<std::vector<unsigned>> weights = std::nullopt);
// f -> f o phi from M(U) to M(U') for phi: U' -> U given by the images of
// the coordinates of U in O(U').
ModuleMap induced_map(const UnipotentModule& from, const UnipotentModule& to, const std::vector<Poly>& comorphism);
// Composition with Frobenius, from the window at fdeg into the one at fdeg + 1.
ModuleMap frobenius_map(const UnipotentModule& lower, const UnipotentModule& upper);
// F: M(U) at fdeg - 1 -> M(U) at fdeg is injective.
bool is_smooth(const UnipotentModule& M);
// Length of M / F M in the window; equals dim Lie(U) for smooth U.
unsigned frobenius_cokernel_length(const UnipotentModule& M);

// 0 -> M(U) -> M(h_* U) -> M(Lie(U, I)) -> 0 for a deformation of U.
struct DIExtension {
  UnipotentModule sub, middle, quotient;
  ModuleMap inclusion, projection;
  bool composite_zero = false, injective = false, surjective = false, exact = false;
  // L = Lie(M(U), I): dim M(U)/F M(U) times rank I equals dim L/FL, and the
  // tangent map at the identity matches M(U)/F M(U) with Lie(U)^dual.
  unsigned lie_dim_sub = 0, lie_dim_quotient = 0, tangent_rank = 0;
  bool lie_certified = false;
  // A V-equivariant section of the projection, as the images of the
  // quotient's generators, when one exists in the window.
  std::optional<std::vector<ZVec>> splitting;
};

DIExtension classify(const Deformation& D, unsigned m, unsigned fdeg);
std::optional<std::vector<ZVec>> find_splitting(const ModuleMap& projection, const ZMatrix& v_middle,
                                                const ZMatrix& v_quotient);

}  // namespace wx
