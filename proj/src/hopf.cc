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

#include "weilext/hopf.hh"

#include <algorithm>
#include <bit>
#include <set>

namespace wx {

HopfAlgebra::HopfAlgebra(std::string name, PresentedAlgebra algebra, std::vector<DualElement> comul,
                         std::vector<DualElement> counit, std::vector<DualElement> antipode) {
  const std::size_t n = algebra.ngens();
  const NilShape base = algebra.base_shape();
  if (comul.size() != n || counit.size() != n || antipode.size() != n)
    throw Error(Error::Kind::config, "structure maps must give one image per generator");
  for (std::size_t i = 0; i < n; ++i) {
    if (!(comul[i].shape() == base) || comul[i].nvars() != 2 * n || comul[i].field() != algebra.field())
      throw Error(Error::Kind::config, "comultiplication image of " + algebra.gens()[i] + " is not in A (x) A");
    if (!(counit[i].shape() == base) || counit[i].nvars() != 0)
      throw Error(Error::Kind::config, "counit image of " + algebra.gens()[i] + " is not a constant");
    if (!(antipode[i].shape() == base) || antipode[i].nvars() != n)
      throw Error(Error::Kind::config, "antipode image of " + algebra.gens()[i] + " is not in A");
  }
  PresentedAlgebra sq = algebra.tensor_power(2), cu = algebra.tensor_power(3);
  d_ = std::make_shared<const Data>(Data{std::move(name), std::move(algebra), std::move(sq), std::move(cu),
                                         std::move(comul), std::move(counit), std::move(antipode), std::nullopt});
}

HopfAlgebra HopfAlgebra::with_smooth(std::optional<bool> s) const {
  auto d = std::make_shared<Data>(*d_);
  d->smooth = s;
  return HopfAlgebra(std::shared_ptr<const Data>(std::move(d)));
}

HopfAlgebra HopfAlgebra::renamed(std::string name) const {
  auto d = std::make_shared<Data>(*d_);
  d->name = std::move(name);
  return HopfAlgebra(std::shared_ptr<const Data>(std::move(d)));
}

Point universal_point(const NilShape& shape, const PresentedAlgebra& R, std::size_t offset, std::size_t n) {
  Point p;
  for (std::size_t i = 0; i < n; ++i) p.emplace_back(shape, R.var(offset + i));
  return p;
}

DualElement constant_in(const DualElement& c, const NilShape& shape, const PresentedAlgebra& R) {
  DualElement out(shape, R.field(), R.ngens());
  for (auto m : c.shape().masks()) out.set_part(m, Poly::constant(R.field(), R.ngens(), c.part(m).constant_term()));
  return out;
}

bool points_equal(const Point& a, const Point& b, const PresentedAlgebra& R) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (R.normal_form(a[i]) != R.normal_form(b[i])) return false;
  return true;
}

Point HopfAlgebra::identity(const NilShape& shape, const PresentedAlgebra& R) const {
  Point p;
  for (auto& c : counit()) p.push_back(constant_in(c, shape, R));
  return p;
}

Point HopfAlgebra::multiply(const Point& g, const Point& h, const PresentedAlgebra& R) const {
  if (g.size() != ngens() || h.size() != ngens()) throw Error(Error::Kind::domain, "point arity mismatch");
  Point images = g;
  images.insert(images.end(), h.begin(), h.end());
  Point out;
  for (auto& c : comul()) out.push_back(substitute(c, images, R));
  return out;
}

Point HopfAlgebra::inverse(const Point& g, const PresentedAlgebra& R) const {
  if (g.size() != ngens()) throw Error(Error::Kind::domain, "point arity mismatch");
  Point out;
  for (auto& s : antipode()) out.push_back(substitute(s, g, R));
  return out;
}

Point HopfAlgebra::conjugate(const Point& g, const Point& h, const PresentedAlgebra& R) const {
  return multiply(multiply(g, h, R), inverse(g, R), R);
}

bool HopfAlgebra::is_point(const Point& g, const PresentedAlgebra& R) const {
  if (g.size() != ngens()) return false;
  if (g.empty()) return true;
  for (auto& rel : algebra().relations())
    if (!substitute(rel, g, R).is_zero()) return false;
  return true;
}

HopfAlgebra HopfAlgebra::special_fibre() const {
  auto bodies = [](const std::vector<DualElement>& v) {
    std::vector<DualElement> out;
    for (auto& e : v) out.emplace_back(NilShape::dual(0), e.body());
    return out;
  };
  return HopfAlgebra(name(), algebra().special_fibre(), bodies(comul()), bodies(counit()), bodies(antipode()))
      .with_smooth(smooth());
}

HopfAlgebra HopfAlgebra::base_change(unsigned rank) const {
  if (irank() != 0) throw Error(Error::Kind::domain, "base change needs a group over k");
  const NilShape s = NilShape::dual(rank);
  auto lifted = [&](const std::vector<DualElement>& v) {
    std::vector<DualElement> out;
    for (auto& e : v) out.emplace_back(s, e.body());
    return out;
  };
  std::vector<DualElement> rels;
  for (auto& b : algebra().basis()) rels.emplace_back(s, b);
  PresentedAlgebra A(field(), gens(), std::move(rels), rels.empty() ? NfStrategy::free_ring : NfStrategy::rewrite, rank);
  return HopfAlgebra("h*" + name(), std::move(A), lifted(comul()), lifted(counit()), lifted(antipode()))
      .with_smooth(smooth());
}

HopfReport verify_hopf(const HopfAlgebra& G) {
  HopfReport rep;
  const std::size_t n = G.ngens();
  const NilShape s = G.algebra().base_shape();
  const PresentedAlgebra& A = G.algebra();
  const PresentedAlgebra pt = PresentedAlgebra::free(G.field(), {});

  rep.relations_preserved = true;
  for (auto& rel : A.relations()) {
    if (!substitute(rel, G.comul(), G.square()).is_zero() || !substitute(rel, G.antipode(), A).is_zero() ||
        (n > 0 && !substitute(rel, G.counit(), pt).is_zero()))
      rep.relations_preserved = false;
  }

  const PresentedAlgebra& A3 = G.cube();
  Point u = universal_point(s, A3, 0, n), v = universal_point(s, A3, n, n), w = universal_point(s, A3, 2 * n, n);
  rep.coassociative =
      points_equal(G.multiply(G.multiply(u, v, A3), w, A3), G.multiply(u, G.multiply(v, w, A3), A3), A3);

  Point x = universal_point(s, A, 0, n), e = G.identity(s, A);
  rep.counital = points_equal(G.multiply(e, x, A), x, A) && points_equal(G.multiply(x, e, A), x, A);
  Point xi = G.inverse(x, A);
  rep.antipode = points_equal(G.multiply(xi, x, A), e, A) && points_equal(G.multiply(x, xi, A), e, A);
  return rep;
}

HopfAlgebra product_group(const HopfAlgebra& G, const HopfAlgebra& H) {
  if (G.field() != H.field() || G.irank() != H.irank())
    throw Error(Error::Kind::domain, "product of groups over different bases");
  const std::size_t ng = G.ngens(), nh = H.ngens(), N = ng + nh;
  std::vector<std::string> names = G.gens();
  std::set<std::string> used(names.begin(), names.end());
  for (auto g : H.gens()) {
    std::string base = g;
    for (int k = 2; used.count(g); ++k) g = base + std::to_string(k);
    used.insert(g);
    names.push_back(g);
  }
  PresentedAlgebra A = G.algebra().tensor(H.algebra(), names);
  std::vector<std::size_t> mg(2 * ng), mh(2 * nh);
  for (std::size_t i = 0; i < ng; ++i) mg[i] = i, mg[ng + i] = N + i;
  for (std::size_t i = 0; i < nh; ++i) mh[i] = ng + i, mh[nh + i] = N + ng + i;
  std::vector<DualElement> comul, counit, antipode;
  for (auto& c : G.comul()) comul.push_back(c.map_parts([&](const Poly& p) { return p.remap(mg, 2 * N); }));
  for (auto& c : H.comul()) comul.push_back(c.map_parts([&](const Poly& p) { return p.remap(mh, 2 * N); }));
  for (auto* src : {&G, &H})
    for (auto& c : src->counit()) counit.push_back(c);
  for (auto& s : G.antipode()) antipode.push_back(s.map_parts([&](const Poly& p) { return p.shift(0, N); }));
  for (auto& s : H.antipode()) antipode.push_back(s.map_parts([&](const Poly& p) { return p.shift(ng, N); }));
  std::optional<bool> smooth;
  if (G.smooth() && H.smooth()) smooth = *G.smooth() && *H.smooth();
  return HopfAlgebra(G.name() + "x" + H.name(), std::move(A), std::move(comul), std::move(counit), std::move(antipode))
      .with_smooth(smooth);
}

Point map_point(const std::vector<DualElement>& comorphism, const Point& x, const PresentedAlgebra& R) {
  Point out;
  for (auto& f : comorphism) out.push_back(substitute(f, x, R));
  return out;
}

bool is_homomorphism(const HopfAlgebra& X, const HopfAlgebra& Y, const std::vector<DualElement>& f) {
  if (f.size() != Y.ngens() || X.irank() != Y.irank()) return false;
  const NilShape s = X.algebra().base_shape();
  const PresentedAlgebra& A = X.algebra();
  const PresentedAlgebra& A2 = X.square();
  Point x = universal_point(s, A, 0, X.ngens());
  if (!Y.is_point(map_point(f, x, A), A)) return false;
  Point u = universal_point(s, A2, 0, X.ngens()), v = universal_point(s, A2, X.ngens(), X.ngens());
  if (!points_equal(map_point(f, X.multiply(u, v, A2), A2),
                    Y.multiply(map_point(f, u, A2), map_point(f, v, A2), A2), A2))
    return false;
  const PresentedAlgebra pt = PresentedAlgebra::free(X.field(), {}, X.irank());
  return points_equal(map_point(f, X.identity(s, pt), pt), Y.identity(s, pt), pt);
}

bool are_inverse(const HopfAlgebra& X, const HopfAlgebra& Y, const std::vector<DualElement>& x_to_y,
                 const std::vector<DualElement>& y_to_x) {
  const NilShape s = X.algebra().base_shape();
  Point x = universal_point(s, X.algebra(), 0, X.ngens());
  Point y = universal_point(s, Y.algebra(), 0, Y.ngens());
  return points_equal(map_point(y_to_x, map_point(x_to_y, x, X.algebra()), X.algebra()), x, X.algebra()) &&
         points_equal(map_point(x_to_y, map_point(y_to_x, y, Y.algebra()), Y.algebra()), y, Y.algebra());
}

LieModule::LieModule(HopfAlgebra G, unsigned rank) : G_(std::move(G)), rank_(rank) {
  if (G_.irank() != 0) throw Error(Error::Kind::domain, "Lie algebra needs a group over k");
  if (rank_ == 0) throw Error(Error::Kind::domain, "I must have positive rank");
  const Field f = G_.field();
  const std::size_t n = G_.ngens();
  std::vector<Coeff> e;
  for (auto& c : G_.counit()) {
    e.push_back(c.body().constant_term());
    identity_.push_back(c.body());
  }
  // Columns are reversed before elimination so that pivots fall on late
  // generators and earlier generators become the coordinates.
  Matrix J(f, 0, n);
  for (auto& rel : G_.algebra().basis()) {
    std::vector<Coeff> row;
    for (std::size_t g = n; g-- > 0;) row.push_back(rel.derivative(g).evaluate(e));
    J.append_row(row);
  }
  // Kernel vectors are 1 on their own free column and 0 on the others, so
  // the free generators read off coordinates.
  auto ker = kernel(J);
  std::vector<bool> pivot(n, false);
  for (auto c : row_reduce(J).pivots) pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!pivot[c]) free_cols.push_back(c);
  for (std::size_t k = ker.size(); k-- > 0;) {
    std::reverse(ker[k].begin(), ker[k].end());
    coord_gens_.push_back(n - 1 - free_cols[k]);
    basis_.push_back(std::move(ker[k]));
  }
}

std::vector<std::vector<Poly>> LieModule::values(const std::vector<Poly>& coords, const PresentedAlgebra& R) const {
  if (coords.size() != dim()) throw Error(Error::Kind::domain, "Lie coordinate count mismatch");
  const std::size_t n = G_.ngens();
  std::vector<std::vector<Poly>> v(rank_, std::vector<Poly>(n, Poly(R.field(), R.ngens())));
  for (std::size_t b = 0; b < basis_.size(); ++b)
    for (unsigned j = 0; j < rank_; ++j) {
      const Poly& c = coords[b * rank_ + j];
      if (c.is_zero()) continue;
      for (std::size_t g = 0; g < n; ++g)
        if (!basis_[b][g].is_zero()) v[j][g] += c * basis_[b][g];
    }
  return v;
}

bool LieModule::is_derivation(const std::vector<std::vector<Poly>>& values, const PresentedAlgebra& R) const {
  std::vector<Coeff> e;
  for (auto& p : identity_) e.push_back(p.constant_term());
  for (auto& rel : G_.algebra().basis()) {
    for (unsigned j = 0; j < rank_; ++j) {
      Poly s(R.field(), R.ngens());
      for (std::size_t g = 0; g < G_.ngens(); ++g) s += values[j][g] * rel.derivative(g).evaluate(e);
      if (!R.normal_form(s).is_zero()) return false;
    }
  }
  return true;
}

std::vector<Poly> LieModule::coordinates(const std::vector<std::vector<Poly>>& vals, const PresentedAlgebra& R) const {
  if (vals.size() != rank_) throw Error(Error::Kind::domain, "Lie values need one list per eps");
  std::vector<Poly> c(dim(), Poly(R.field(), R.ngens()));
  for (std::size_t b = 0; b < basis_.size(); ++b)
    for (unsigned j = 0; j < rank_; ++j) c[b * rank_ + j] = R.normal_form(vals[j][coord_gens_[b]]);
  auto back = values(c, R);
  for (unsigned j = 0; j < rank_; ++j)
    for (std::size_t g = 0; g < G_.ngens(); ++g)
      if (R.normal_form(back[j][g] - vals[j][g]) != Poly(R.field(), R.ngens()))
        throw Error(Error::Kind::domain, "invalid Lie point: values are not a derivation at the identity");
  return c;
}

Point LieModule::exp_values(const std::vector<std::vector<Poly>>& vals, const NilShape& shape,
                            const PresentedAlgebra& R) const {
  if (shape.nparams() < rank_) throw Error(Error::Kind::domain, "shape too small for I");
  if (!is_derivation(vals, R)) throw Error(Error::Kind::domain, "invalid Lie point: not a derivation at the identity");
  Point p;
  for (std::size_t g = 0; g < G_.ngens(); ++g) {
    DualElement d(shape, Poly::constant(R.field(), R.ngens(), identity_[g].constant_term()));
    for (unsigned j = 0; j < rank_; ++j) d.set_part(1u << j, vals[j][g]);
    p.push_back(std::move(d));
  }
  return p;
}

Point LieModule::exp(const std::vector<Poly>& coords, const NilShape& shape, const PresentedAlgebra& R) const {
  return exp_values(values(coords, R), shape, R);
}

std::vector<Poly> LieModule::log(const Point& p, const PresentedAlgebra& R) const {
  if (p.size() != G_.ngens()) throw Error(Error::Kind::domain, "point arity mismatch");
  std::vector<std::vector<Poly>> vals(rank_);
  for (std::size_t g = 0; g < p.size(); ++g) {
    DualElement d = R.normal_form(p[g]);
    const auto& ms = d.shape().masks();
    for (std::size_t i = 0; i < ms.size(); ++i) {
      const Poly& c = d.component(i);
      bool eps = ms[i] && std::has_single_bit(ms[i]) && ms[i] < (1u << rank_);
      if (ms[i] == 0) {
        if (c != Poly::constant(R.field(), R.ngens(), identity_[g].constant_term()))
          throw Error(Error::Kind::domain, "point does not reduce to the identity");
      } else if (!eps && !c.is_zero()) {
        throw Error(Error::Kind::domain, "point has parts outside I");
      }
    }
    for (unsigned j = 0; j < rank_; ++j) vals[j].push_back(d.part(1u << j));
  }
  return coordinates(vals, R);
}

std::vector<Poly> LieModule::adjoint_apply(const std::vector<Poly>& g, const std::vector<Poly>& coords,
                                           const PresentedAlgebra& R) const {
  const NilShape s = NilShape::dual(rank_);
  Point gp;
  for (auto& x : g) gp.emplace_back(s, x);
  return log(G_.conjugate(gp, exp(coords, s, R), R), R);
}

std::vector<std::vector<Poly>> LieModule::adjoint_matrix() const {
  const PresentedAlgebra& A = G_.algebra();
  std::vector<Poly> g;
  for (std::size_t i = 0; i < G_.ngens(); ++i) g.push_back(A.var(i));
  std::vector<std::vector<Poly>> M(dim(), std::vector<Poly>(dim(), Poly(A.field(), A.ngens())));
  for (std::size_t col = 0; col < dim(); ++col) {
    std::vector<Poly> unit(dim(), Poly(A.field(), A.ngens()));
    unit[col] = Poly::constant(A.field(), A.ngens(), 1);
    auto img = adjoint_apply(g, unit, A);
    for (std::size_t row = 0; row < dim(); ++row) M[row][col] = img[row];
  }
  return M;
}

std::vector<Poly> LieModule::bracket(const std::vector<Poly>& x, const std::vector<Poly>& y,
                                     const PresentedAlgebra& R) const {
  if (x.size() != lie_dim() || y.size() != lie_dim()) throw Error(Error::Kind::domain, "bracket needs Lie G coordinates");
  LieModule one(G_, 1);
  const NilShape t = NilShape::tensor(NilShape::dual(1), NilShape::dual(1));
  auto vx = one.values(x, R)[0], vy = one.values(y, R)[0];
  Point p, q;
  for (std::size_t g = 0; g < G_.ngens(); ++g) {
    DualElement a(t, Poly::constant(R.field(), R.ngens(), identity_[g].constant_term()));
    DualElement b = a;
    a.set_part(1, vx[g]);
    b.set_part(2, vy[g]);
    p.push_back(std::move(a));
    q.push_back(std::move(b));
  }
  Point pq = G_.multiply(p, q, R), qp = G_.multiply(q, p, R);
  std::vector<std::vector<Poly>> z(1);
  for (std::size_t g = 0; g < G_.ngens(); ++g) z[0].push_back((pq[g] - qp[g]).part(3));
  return one.coordinates(z, R);
}

}  // namespace wx
