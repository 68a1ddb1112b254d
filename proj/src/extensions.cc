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

#include "weilext/extensions.hh"

#include <gmpxx.h>

#include <map>
#include <stdexcept>

#include "weilext/catalog.hh"
#include "weilext/linalg.hh"

namespace wx {

namespace {

std::vector<Poly> vars(const PresentedAlgebra& R, std::size_t offset, std::size_t n) {
  std::vector<Poly> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(R.var(offset + i));
  return v;
}

Point as_point(const std::vector<Poly>& g, const NilShape& shape) {
  Point p;
  for (auto& x : g) p.emplace_back(shape, x);
  return p;
}

std::vector<Poly> bodies(const Point& p) {
  std::vector<Poly> v;
  for (auto& x : p) v.push_back(x.body());
  return v;
}

std::vector<Poly> compose_all(const std::vector<Poly>& fs, const std::vector<Poly>& images, const PresentedAlgebra& R) {
  std::vector<Poly> out;
  for (auto& f : fs) out.push_back(R.normal_form(f.compose(images)));
  return out;
}

std::vector<Poly> concat(std::vector<Poly> a, const std::vector<Poly>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<Poly> add(const std::vector<Poly>& a, const std::vector<Poly>& b) {
  std::vector<Poly> out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

// Ad(g) as a matrix of polynomials in A together with its Lie module.
struct Adjoint {
  LieModule lie;
  std::vector<std::vector<Poly>> matrix;

  Adjoint(const HopfAlgebra& G, unsigned rank) : lie(G, rank), matrix(lie.adjoint_matrix()) {}

  // Ad(g)x for a k-point g over R.
  std::vector<Poly> apply(const std::vector<Poly>& g, const std::vector<Poly>& x, const PresentedAlgebra& R) const {
    std::vector<Poly> out(x.size(), Poly(R.field(), R.ngens()));
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < x.size(); ++j)
        if (!matrix[i][j].is_zero() && !x[j].is_zero()) out[i] += matrix[i][j].compose(g) * x[j];
    for (auto& p : out) p = R.normal_form(p);
    return out;
  }
};

void require_same_base(const HopfAlgebra& a, unsigned ra, const HopfAlgebra& b, unsigned rb) {
  if (ra != rb || a.algebra().gens() != b.algebra().gens() || a.comul() != b.comul() || a.field() != b.field())
    throw Error(Error::Kind::domain, "cochains live over different groups or ideals");
}

std::vector<Poly> normalized(std::vector<Poly> coords, const PresentedAlgebra& R, std::size_t dim) {
  if (coords.size() != dim) throw Error(Error::Kind::domain, "Lie coordinate count mismatch");
  for (auto& c : coords) {
    if (c.field() != R.field() || c.nvars() != R.ngens())
      throw Error(Error::Kind::domain, "cochain coordinate lives in the wrong ring");
    c = R.normal_form(c);
  }
  return coords;
}

}  // namespace

// ---- cochains ----

Cochain1::Cochain1(HopfAlgebra G, unsigned rank, std::vector<Poly> coords)
    : G_(std::move(G)), rank_(rank),
      coords_(normalized(std::move(coords), G_.algebra(), LieModule(G_, rank).dim())) {
  const PresentedAlgebra pt = PresentedAlgebra::free(G_.field(), {});
  std::vector<Poly> e;
  for (auto& c : G_.counit()) e.push_back(Poly::constant(G_.field(), 0, c.body().constant_term()));
  for (auto& c : coords_)
    if (!c.compose(e).is_zero()) throw Error(Error::Kind::domain, "1-cochain is not normalized: phi(e) != 0");
}

Cochain1 Cochain1::zero(HopfAlgebra G, unsigned rank) {
  const std::size_t d = LieModule(G, rank).dim();
  const Poly z(G.field(), G.ngens());
  return Cochain1(std::move(G), rank, std::vector<Poly>(d, z));
}

std::vector<Poly> Cochain1::evaluate(const std::vector<Poly>& g, const PresentedAlgebra& R) const {
  return compose_all(coords_, g, R);
}

Cochain1 Cochain1::operator+(const Cochain1& o) const {
  require_same_base(G_, rank_, o.G_, o.rank_);
  return Cochain1(G_, rank_, add(coords_, o.coords_));
}

Cochain1 Cochain1::operator-() const { return *this * Coeff::from_int(G_.field(), -1); }

Cochain1 Cochain1::operator*(const Coeff& c) const {
  std::vector<Poly> out;
  for (auto& p : coords_) out.push_back(p * c);
  return Cochain1(G_, rank_, std::move(out));
}

Cocycle2::Cocycle2(HopfAlgebra G, unsigned rank, std::vector<Poly> coords)
    : G_(std::move(G)), rank_(rank), coords_(normalized(std::move(coords), G_.square(), LieModule(G_, rank).dim())) {}

Cocycle2 Cocycle2::zero(HopfAlgebra G, unsigned rank) {
  const std::size_t d = LieModule(G, rank).dim();
  const Poly z(G.field(), 2 * G.ngens());
  return Cocycle2(std::move(G), rank, std::vector<Poly>(d, z));
}

std::vector<std::vector<Poly>> Cocycle2::values() const { return LieModule(G_, rank_).values(coords_, G_.square()); }

std::vector<Poly> Cocycle2::evaluate(const std::vector<Poly>& u, const std::vector<Poly>& v,
                                     const PresentedAlgebra& R) const {
  return compose_all(coords_, concat(u, v), R);
}

bool Cocycle2::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Poly& p) { return p.is_zero(); });
}

Cocycle2 Cocycle2::operator+(const Cocycle2& o) const {
  require_same_base(G_, rank_, o.G_, o.rank_);
  return Cocycle2(G_, rank_, add(coords_, o.coords_));
}

Cocycle2 Cocycle2::operator-() const { return *this * Coeff::from_int(G_.field(), -1); }

Cocycle2 Cocycle2::operator*(const Coeff& c) const {
  std::vector<Poly> out;
  for (auto& p : coords_) out.push_back(p * c);
  return Cocycle2(G_, rank_, std::move(out));
}

std::string Cocycle2::to_string() const {
  const auto& names = G_.square().gens();
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) s += (i ? ", " : "") + coords_[i].to_string(names);
  return s + ")";
}

bool check_cocycle(const Cocycle2& c) {
  const HopfAlgebra& G = c.group();
  const std::size_t n = G.ngens();
  const NilShape k0 = NilShape::dual(0);
  const PresentedAlgebra& C3 = G.cube();
  Adjoint ad(G, c.rank());
  std::vector<Poly> u = vars(C3, 0, n), v = vars(C3, n, n), w = vars(C3, 2 * n, n);
  std::vector<Poly> uv = bodies(G.multiply(as_point(u, k0), as_point(v, k0), C3));
  std::vector<Poly> vw = bodies(G.multiply(as_point(v, k0), as_point(w, k0), C3));
  auto lhs = add(c.evaluate(u, v, C3), c.evaluate(uv, w, C3));
  auto rhs = add(ad.apply(u, c.evaluate(v, w, C3), C3), c.evaluate(u, vw, C3));
  for (std::size_t i = 0; i < lhs.size(); ++i)
    if (C3.normal_form(lhs[i] - rhs[i]) != Poly(G.field(), C3.ngens())) return false;

  const PresentedAlgebra& A = G.algebra();
  std::vector<Poly> e, x = vars(A, 0, n);
  for (auto& ce : G.counit()) e.push_back(Poly::constant(G.field(), n, ce.body().constant_term()));
  for (auto& p : concat(c.evaluate(e, x, A), c.evaluate(x, e, A)))
    if (!p.is_zero()) return false;
  return true;
}

Cocycle2 coboundary(const Cochain1& phi) {
  const HopfAlgebra& G = phi.group();
  const std::size_t n = G.ngens();
  const NilShape k0 = NilShape::dual(0);
  const PresentedAlgebra& S = G.square();
  Adjoint ad(G, phi.rank());
  std::vector<Poly> u = vars(S, 0, n), v = vars(S, n, n);
  std::vector<Poly> uv = bodies(G.multiply(as_point(u, k0), as_point(v, k0), S));
  auto out = phi.evaluate(uv, S);
  auto a = phi.evaluate(u, S), b = ad.apply(u, phi.evaluate(v, S), S);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= a[i] + b[i];
  return Cocycle2(G, phi.rank(), std::move(out));
}

namespace {

// u.v = exp(c(u,v)) uv for points of h*G over R[I].
Point odot(const HopfAlgebra& H, const LieModule& lie, const Cocycle2& c, const Point& u, const Point& v,
           const PresentedAlgebra& R) {
  const NilShape shape = u.front().shape();
  Point e = lie.exp(c.evaluate(bodies(u), bodies(v), R), shape, R);
  return H.multiply(e, H.multiply(u, v, R), R);
}

}  // namespace

bool odot_associative(const Cocycle2& c) {
  const HopfAlgebra H = c.group().base_change(c.rank());
  const PresentedAlgebra& R = H.cube();
  const NilShape s = NilShape::dual(c.rank());
  const std::size_t n = H.ngens();
  LieModule lie(c.group(), c.rank());
  Point u = universal_point(s, R, 0, n), v = universal_point(s, R, n, n), w = universal_point(s, R, 2 * n, n);
  return points_equal(odot(H, lie, c, odot(H, lie, c, u, v, R), w, R), odot(H, lie, c, u, odot(H, lie, c, v, w, R), R),
                      R);
}

Poly witt_carry(Field f, std::size_t nvars, std::size_t x, std::size_t y) {
  if (f.is_rational()) throw Error(Error::Kind::domain, "the Witt carry needs characteristic p");
  const unsigned p = f.characteristic();
  Poly out(f, nvars);
  const Poly X = Poly::variable(f, nvars, x), Y = Poly::variable(f, nvars, y);
  mpz_class binom = 1;
  for (unsigned i = 1; i < p; ++i) {
    binom = binom * (p - i + 1) / i;
    mpz_class q = binom / p;
    out += X.pow(i) * Y.pow(p - i) * Coeff::from_mpq(f, mpq_class(q));
  }
  return out;
}

// ---- extensions ----

HopfAlgebra ExtensionObj::kernel() const { return catalog::vector_group(base().field(), dim_, "l"); }

std::vector<DualElement> ExtensionObj::inclusion() const {
  const NilShape k0 = NilShape::dual(0);
  const Field f = base().field();
  std::vector<DualElement> out;
  for (std::size_t i = 0; i < dim_; ++i) out.emplace_back(k0, Poly::variable(f, dim_, i));
  for (auto& e : base().counit()) out.emplace_back(k0, Poly::constant(f, dim_, e.body().constant_term()));
  return out;
}

std::vector<DualElement> ExtensionObj::projection() const {
  std::vector<DualElement> out;
  for (std::size_t g = 0; g < base().ngens(); ++g) out.emplace_back(NilShape::dual(0), E_.algebra().var(dim_ + g));
  return out;
}

std::vector<DualElement> ExtensionObj::section() const {
  const PresentedAlgebra& A = base().algebra();
  std::vector<DualElement> out;
  for (std::size_t i = 0; i < dim_; ++i) out.emplace_back(NilShape::dual(0), Poly(A.field(), A.ngens()));
  for (std::size_t g = 0; g < base().ngens(); ++g) out.emplace_back(NilShape::dual(0), A.var(g));
  return out;
}

ExtensionObj build_extension(const Cocycle2& c) {
  if (!check_cocycle(c)) throw Error(Error::Kind::domain, "not a normalized 2-cocycle");
  const HopfAlgebra& G = c.group();
  const Field f = G.field();
  const std::size_t n = G.ngens();
  Adjoint ad(G, c.rank());
  const std::size_t d = ad.lie.dim();
  const NilShape k0 = NilShape::dual(0);

  std::vector<std::string> names;
  for (std::size_t i = 1; i <= d; ++i) {
    std::string nm = "l" + std::to_string(i);
    while (std::find(G.gens().begin(), G.gens().end(), nm) != G.gens().end()) nm = "_" + nm;
    names.push_back(nm);
  }
  names.insert(names.end(), G.gens().begin(), G.gens().end());
  std::vector<Poly> rels;
  for (auto& r : G.algebra().relations()) rels.push_back(r.body().shift(d, d + n));
  const NfStrategy strategy = rels.empty() ? NfStrategy::free_ring : G.algebra().strategy();
  PresentedAlgebra EA(f, names, rels, strategy);

  const PresentedAlgebra S = EA.tensor_power(2);
  std::vector<Poly> x = vars(S, 0, d), u = vars(S, d, n), x2 = vars(S, d + n, d), v = vars(S, 2 * d + n, n);
  std::vector<DualElement> comul;
  auto xs = add(add(x, ad.apply(u, x2, S)), c.evaluate(u, v, S));
  for (auto& p : xs) comul.emplace_back(k0, S.normal_form(p));
  for (auto& g : G.multiply(as_point(u, k0), as_point(v, k0), S)) comul.push_back(g);

  std::vector<DualElement> counit;
  for (std::size_t i = 0; i < d; ++i) counit.emplace_back(k0, Poly(f, 0));
  for (auto& e : G.counit()) counit.push_back(e);

  // (x, g)^-1 = (-Ad(g^-1)(x + c(g, g^-1)), g^-1).
  std::vector<Poly> y = vars(EA, 0, d), g = vars(EA, d, n);
  std::vector<Poly> ginv = bodies(G.inverse(as_point(g, k0), EA));
  std::vector<DualElement> antipode;
  for (auto& p : ad.apply(ginv, add(y, c.evaluate(g, ginv, EA)), EA)) antipode.emplace_back(k0, -p);
  for (auto& p : ginv) antipode.emplace_back(k0, p);

  HopfAlgebra E("E(" + G.name() + ")", std::move(EA), std::move(comul), std::move(counit), std::move(antipode));
  return ExtensionObj(c, E.with_smooth(G.smooth()), d);
}

// ---- deformations ----

std::vector<DualElement> identity_rigidification(const HopfAlgebra& G, unsigned rank) {
  const PresentedAlgebra& A = G.algebra();
  std::vector<DualElement> out;
  for (std::size_t g = 0; g < G.ngens(); ++g) out.emplace_back(NilShape::dual(rank), A.var(g));
  return out;
}

Deformation Deformation::rigidified(HopfAlgebra group, std::vector<DualElement> sigma) {
  HopfAlgebra base = group.special_fibre();
  const unsigned r = group.irank();
  if (r == 0) throw Error(Error::Kind::domain, "a deformation lives over k[I] with I nonzero");
  const HopfAlgebra H = base.base_change(r);
  const PresentedAlgebra& A = H.algebra();
  if (sigma.size() != group.ngens()) throw Error(Error::Kind::domain, "rigidification arity mismatch");
  for (std::size_t g = 0; g < sigma.size(); ++g) {
    if (!(sigma[g].shape() == NilShape::dual(r)) || sigma[g].nvars() != A.ngens())
      throw Error(Error::Kind::domain, "rigidification images must live in A[I]");
    sigma[g] = A.normal_form(sigma[g]);
    if (sigma[g].body() != A.normal_form(A.var(g)))
      throw Error(Error::Kind::domain, "not a rigidification: it does not lift the identity of the special fibre");
  }
  for (auto& rel : group.algebra().relations())
    if (!substitute(rel, sigma, A).is_zero())
      throw Error(Error::Kind::domain,
                  "not a rigidification: the relations of the group fail on h*G (the group is not rigid)");
  const PresentedAlgebra pt = PresentedAlgebra::free(base.field(), {}, r);
  if (!points_equal(map_point(sigma, H.identity(NilShape::dual(r), pt), pt), group.identity(NilShape::dual(r), pt), pt))
    throw Error(Error::Kind::domain, "not a rigidification: sigma(1) != 1");
  return Deformation(std::move(group), std::move(base), std::move(sigma), std::nullopt);
}

Deformation deform(const Cocycle2& c) {
  if (!check_cocycle(c)) throw Error(Error::Kind::domain, "not a normalized 2-cocycle");
  const HopfAlgebra& G = c.group();
  const unsigned r = c.rank();
  if (r == 0) throw Error(Error::Kind::domain, "deformations need I of positive rank");
  const HopfAlgebra H = G.base_change(r);
  const std::size_t n = G.ngens();
  const NilShape s = NilShape::dual(r);
  LieModule lie(G, r);

  const PresentedAlgebra& S = H.square();
  Point u = universal_point(s, S, 0, n), v = universal_point(s, S, n, n);
  std::vector<DualElement> comul = odot(H, lie, c, u, v, S);

  const PresentedAlgebra& A = H.algebra();
  Point x = universal_point(s, A, 0, n);
  Point xinv = H.inverse(x, A);
  auto cx = c.evaluate(bodies(x), bodies(xinv), A);
  for (auto& p : cx) p = -p;
  std::vector<DualElement> antipode = H.multiply(xinv, lie.exp(cx, s, A), A);

  HopfAlgebra D("deform(" + G.name() + ")", A, std::move(comul), H.counit(), std::move(antipode));
  return Deformation(D.with_smooth(G.smooth()), G, identity_rigidification(G, r), c);
}

Cocycle2 extract_cocycle(const Deformation& D) {
  const HopfAlgebra& G = D.base();
  const unsigned r = D.rank();
  const HopfAlgebra H = G.base_change(r);
  const std::size_t n = G.ngens();
  const NilShape s = NilShape::dual(r);
  const PresentedAlgebra& R = H.square();
  LieModule lie(G, r);
  const auto& sigma = D.rigidification();

  Point u = universal_point(s, R, 0, n), v = universal_point(s, R, n, n);
  Point prod = D.group().multiply(map_point(sigma, u, R), map_point(sigma, v, R), R);
  // sigma lifts the identity, so sigma^-1(y) = 2y - sigma(y).
  Point back = map_point(sigma, prod, R);
  for (std::size_t g = 0; g < n; ++g) back[g] = R.normal_form(prod[g] + prod[g] - back[g]);
  Point q = H.multiply(back, H.inverse(H.multiply(u, v, R), R), R);
  std::vector<Poly> coords;
  try {
    coords = lie.log(q, R);
  } catch (const Error& e) {
    throw Error(Error::Kind::domain,
                std::string("not a deformation of its special fibre: the law is not an infinitesimal left "
                            "translation (") + e.what() + ")");
  }
  Cocycle2 c(G, r, std::move(coords));
  if (!check_cocycle(c)) throw std::logic_error("extracted 2-cochain fails the cocycle identity");
  return c;
}

WeilExtension extension_of(const Deformation& D) {
  const HopfAlgebra& G = D.base();
  const unsigned r = D.rank();
  const std::size_t n = G.ngens();
  const NilShape k0 = NilShape::dual(0);
  WeilRestriction w(D.group());
  const HopfAlgebra& E = w.result();
  LieModule lie(G, r);

  std::vector<DualElement> section;
  for (std::size_t h = 0; h < n; ++h) {
    const DualElement& im = D.rigidification()[h];
    section.emplace_back(k0, im.body());
    for (unsigned j = 1; j <= r; ++j) section.emplace_back(k0, im.part(1u << (j - 1)));
  }

  // Kernel points of h_*G_c -> G are (e_bar, e_j + v_j) with v a derivation at e.
  auto kernel_coords = [&](const Point& y, const PresentedAlgebra& R) {
    std::vector<std::vector<Poly>> vals(r);
    for (std::size_t g = 0; g < n; ++g) {
      const DualElement& e = D.group().counit()[g];
      if (R.normal_form(y[w.index(g, 0)].body()) != Poly::constant(R.field(), R.ngens(), e.body().constant_term()))
        throw std::logic_error("element does not lie in the kernel of h_*G_c -> G");
      for (unsigned j = 1; j <= r; ++j)
        vals[j - 1].push_back(R.normal_form(y[w.index(g, j)].body() -
                                            Poly::constant(R.field(), R.ngens(), e.part(1u << (j - 1)).constant_term())));
    }
    return lie.coordinates(vals, R);
  };
  auto kernel_point = [&](const std::vector<Poly>& x, const PresentedAlgebra& R) {
    auto vals = lie.values(x, R);
    Point y;
    for (std::size_t g = 0; g < n; ++g) {
      const DualElement& e = D.group().counit()[g];
      y.emplace_back(k0, Poly::constant(R.field(), R.ngens(), e.body().constant_term()));
      for (unsigned j = 1; j <= r; ++j)
        y.emplace_back(k0, Poly::constant(R.field(), R.ngens(), e.part(1u << (j - 1)).constant_term()) + vals[j - 1][g]);
    }
    return y;
  };

  const PresentedAlgebra& S = G.square();
  std::vector<Poly> u = vars(S, 0, n), v = vars(S, n, n);
  std::vector<Poly> uv = bodies(G.multiply(as_point(u, k0), as_point(v, k0), S));
  Point su = map_point(section, as_point(u, k0), S), sv = map_point(section, as_point(v, k0), S);
  Point suv = map_point(section, as_point(uv, k0), S);
  Point k = E.multiply(E.multiply(su, sv, S), E.inverse(suv, S), S);
  Cocycle2 c(G, r, kernel_coords(k, S));
  ExtensionObj ext = build_extension(c);

  const std::size_t d = ext.lie_dim();
  const PresentedAlgebra& EC = ext.group().algebra();
  Point fwd = E.multiply(kernel_point(vars(EC, 0, d), EC), map_point(section, as_point(vars(EC, d, n), k0), EC), EC);

  const PresentedAlgebra& EA = E.algebra();
  Point y = universal_point(k0, EA, 0, E.ngens());
  Point g = map_point(w.projection(), y, EA);
  Point t = E.multiply(y, E.inverse(map_point(section, g, EA), EA), EA);
  std::vector<DualElement> bwd;
  for (auto& p : kernel_coords(t, EA)) bwd.emplace_back(k0, p);
  for (auto& p : g) bwd.push_back(p);

  return WeilExtension{std::move(w), std::move(section), std::move(c), std::move(ext), std::move(fwd), std::move(bwd)};
}

Deformation weil_extend(const ExtensionObj& E) { return deform(E.cocycle()); }

bool k_lambda_member(const ExtensionObj& E, const Point& p, const Coeff& lambda, const PresentedAlgebra& R) {
  const std::size_t d = E.lie_dim(), n = E.base().ngens();
  if (p.size() != d + n) throw Error(Error::Kind::domain, "point arity mismatch");
  const unsigned r = E.cocycle().rank();
  LieModule lie(E.base(), r);
  // Only bodies of x survive in exp since I^2 = 0.
  std::vector<Poly> x;
  for (std::size_t i = 0; i < d; ++i) x.push_back(p[i].body() * lambda);
  Point g(p.begin() + d, p.end());
  return points_equal(g, lie.exp(x, g.front().shape(), R), R);
}

ExtensionObj baer_sum(const ExtensionObj& a, const ExtensionObj& b) { return build_extension(a.cocycle() + b.cocycle()); }

ExtensionObj scalar_mul(const Coeff& lambda, const ExtensionObj& E) { return build_extension(E.cocycle() * lambda); }

namespace {
Cocycle2 cocycle_of(const Deformation& D) { return D.cocycle() ? *D.cocycle() : extract_cocycle(D); }
}  // namespace

Deformation scale_deformation(const Coeff& lambda, const Deformation& D) { return deform(cocycle_of(D) * lambda); }

Deformation sum_deformations(const Deformation& a, const Deformation& b) {
  return deform(cocycle_of(a) + cocycle_of(b));
}

std::vector<DualElement> morphism_from_cochain(const Cochain1& phi, const ExtensionObj& source,
                                               const ExtensionObj& target) {
  require_same_base(phi.group(), phi.rank(), source.base(), source.cocycle().rank());
  if (coboundary(phi) != target.cocycle() - source.cocycle())
    throw Error(Error::Kind::domain, "d phi differs from the difference of the cocycles");
  const std::size_t d = source.lie_dim(), n = source.base().ngens();
  const PresentedAlgebra& R = source.group().algebra();
  std::vector<Poly> g = vars(R, d, n);
  auto shift = phi.evaluate(g, R);
  std::vector<DualElement> out;
  for (std::size_t i = 0; i < d; ++i) out.emplace_back(NilShape::dual(0), R.normal_form(R.var(i) + shift[i]));
  for (auto& x : g) out.emplace_back(NilShape::dual(0), x);
  return out;
}

std::optional<Cochain1> solve_coboundary(const Cocycle2& target, unsigned degree) {
  const HopfAlgebra& G = target.group();
  const Field f = G.field();
  const std::size_t n = G.ngens();
  const PresentedAlgebra& A = G.algebra();
  const std::size_t d = target.coords().size();

  // Standard monomials of degree 1..degree, shifted to vanish at e.
  std::vector<Poly> shifted;
  std::vector<Poly> e;
  for (auto& c : G.counit()) e.push_back(Poly::constant(f, 0, c.body().constant_term()));
  std::vector<Mono> frontier{Mono(n, 0)};
  for (unsigned deg = 1; deg <= degree; ++deg) {
    std::vector<Mono> next;
    for (auto& m : frontier)
      for (std::size_t i = 0; i < n; ++i) {
        if (std::any_of(m.begin(), m.begin() + i, [](auto x) { return x != 0; })) break;
        Mono mm = m;
        ++mm[i];
        Poly p = Poly::monomial(f, mm, Coeff::one(f));
        if (A.normal_form(p) != p) continue;
        next.push_back(mm);
        shifted.push_back(p - Poly::constant(f, n, p.compose(e).constant_term()));
      }
    frontier = std::move(next);
  }

  // Column (i, m): d of the cochain m - m(e) in coordinate i.
  std::vector<std::vector<Poly>> columns;
  for (std::size_t i = 0; i < d; ++i)
    for (auto& m : shifted) {
      std::vector<Poly> coords(d, Poly(f, n));
      coords[i] = m;
      columns.push_back(coboundary(Cochain1(G, target.rank(), coords)).coords());
    }
  std::map<std::pair<std::size_t, Mono>, std::size_t> row_of;
  auto note = [&](const std::vector<Poly>& v) {
    for (std::size_t i = 0; i < d; ++i)
      for (auto& t : v[i].terms()) row_of.emplace(std::pair{i, t.mono}, row_of.size());
  };
  for (auto& col : columns) note(col);
  note(target.coords());
  Matrix M(f, row_of.size(), columns.size());
  std::vector<Coeff> rhs(row_of.size(), Coeff::zero(f));
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (std::size_t i = 0; i < d; ++i)
      for (auto& t : columns[j][i].terms()) M.at(row_of.at({i, t.mono}), j) = t.coeff;
  for (std::size_t i = 0; i < d; ++i)
    for (auto& t : target.coords()[i].terms()) rhs[row_of.at({i, t.mono})] = t.coeff;
  if (columns.empty()) return target.is_zero() ? std::optional(Cochain1::zero(G, target.rank())) : std::nullopt;
  auto sol = solve(M, rhs);
  if (!sol) return std::nullopt;
  std::vector<Poly> coords(d, Poly(f, n));
  std::size_t col = 0;
  for (std::size_t i = 0; i < d; ++i)
    for (auto& m : shifted) coords[i] += m * (*sol)[col++];
  return Cochain1(G, target.rank(), std::move(coords));
}

}  // namespace wx
