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

#include "weilext/group_algebra.hh"

#include <algorithm>
#include <map>

namespace wx {

namespace {

bool standard(const Mono& m, const std::vector<Poly>& basis) {
  for (auto& b : basis)
    if (mono_divides(b.lead().mono, m)) return false;
  return true;
}

// Standard monomials of total degree <= bound, in increasing grevlex order.
std::vector<Mono> standard_monomials(std::size_t n, unsigned bound, const std::vector<Poly>& gb) {
  std::vector<Mono> out;
  std::vector<Mono> layer{Mono(n, 0)};
  for (unsigned d = 0; d <= bound && !layer.empty(); ++d) {
    std::vector<Mono> next;
    for (auto& m : layer) {
      if (!standard(m, gb)) continue;
      out.push_back(m);
      if (d == bound) continue;
      for (std::size_t i = 0; i < n; ++i) {
        Mono u = m;
        ++u[i];
        next.push_back(std::move(u));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    layer = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const Mono& a, const Mono& b) { return grevlex_cmp(a, b) < 0; });
  return out;
}

// Finite iff every variable has a pure power among the leading monomials.
std::optional<unsigned> finite_degree_bound(std::size_t n, const std::vector<Poly>& gb) {
  unsigned bound = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<unsigned> e;
    for (auto& b : gb) {
      const Mono& m = b.lead().mono;
      if (mono_degree(m) == m[i] && (!e || m[i] < *e)) e = m[i];
    }
    if (!e) return std::nullopt;
    bound += *e - 1;
  }
  return bound;
}

}  // namespace

GroupAlgebra::GroupAlgebra(HopfAlgebra G, unsigned trunc) : GroupAlgebra(std::move(G), trunc, false) {}

GroupAlgebra GroupAlgebra::exact(HopfAlgebra G) { return GroupAlgebra(std::move(G), 0, true); }

GroupAlgebra::GroupAlgebra(HopfAlgebra G, unsigned trunc, bool exact) {
  const PresentedAlgebra& A = G.algebra();
  const std::size_t n = A.ngens();
  auto bound = finite_degree_bound(n, A.basis());
  if (exact && !bound)
    throw Error(Error::Kind::unsupported, "group " + G.name() + " is not finite; use a truncation");
  if (!exact && trunc == 0) throw Error(Error::Kind::bounds, "truncation degree must be positive");
  auto d = std::make_shared<Data>(Data{G, trunc, exact, {}, {}});
  d->basis = standard_monomials(n, exact ? *bound : trunc, A.basis());
  std::map<Mono, std::size_t> where;
  for (std::size_t i = 0; i < d->basis.size(); ++i) where[d->basis[i]] = i;
  const NilShape s = A.base_shape();
  const PresentedAlgebra pt = PresentedAlgebra::free(A.field(), {}, G.irank());
  for (auto& m : d->basis) {
    DualElement dm = substitute(Poly::monomial(A.field(), m, Coeff::one(A.field())),
                                std::vector<DualElement>(G.comul()), G.square());
    std::map<std::pair<std::size_t, std::size_t>, DualElement> acc;
    const auto& masks = s.masks();
    for (std::size_t k = 0; k < masks.size(); ++k) {
      for (auto& t : dm.component(k).terms()) {
        Mono l(t.mono.begin(), t.mono.begin() + n), r(t.mono.begin() + n, t.mono.end());
        auto il = where.find(l), ir = where.find(r);
        if (il == where.end() || ir == where.end()) continue;
        auto key = std::make_pair(il->second, ir->second);
        auto it = acc.try_emplace(key, s, A.field(), 0).first;
        DualElement c(s, A.field(), 0);
        c.set_part(masks[k], Poly::constant(A.field(), 0, t.coeff));
        it->second += c;
      }
    }
    std::vector<Entry> row;
    for (auto& [k, c] : acc) row.push_back({k.first, k.second, c});
    d->table.push_back(std::move(row));
  }
  d_ = std::move(d);
}

int GroupAlgebra::index(const Mono& m) const {
  auto it = std::lower_bound(d_->basis.begin(), d_->basis.end(), m,
                             [](const Mono& a, const Mono& b) { return grevlex_cmp(a, b) < 0; });
  if (it == d_->basis.end() || *it != m) return -1;
  return static_cast<int>(it - d_->basis.begin());
}

void GroupAlgebra::check_(const Functional& u) const {
  if (u.trunc != truncation() || u.values.size() != size())
    throw Error(Error::Kind::domain, "functionals from incompatible truncations");
}

Functional GroupAlgebra::zero() const {
  const Field f = group().field();
  return {truncation(), std::vector<DualElement>(size(), DualElement(group().algebra().base_shape(), f, 0))};
}

Functional GroupAlgebra::counit() const { return embed_point(group().counit()); }

Functional GroupAlgebra::delta(std::size_t i) const {
  Functional u = zero();
  u.values.at(i).set_part(0, Poly::constant(group().field(), 0, 1));
  return u;
}

Functional GroupAlgebra::embed_point(const std::vector<DualElement>& g) const {
  if (g.size() != group().ngens()) throw Error(Error::Kind::domain, "point arity mismatch");
  const PresentedAlgebra pt = PresentedAlgebra::free(group().field(), {}, group().irank());
  Functional u = zero();
  for (std::size_t i = 0; i < size(); ++i) {
    Poly m = Poly::monomial(group().field(), basis()[i], Coeff::one(group().field()));
    u.values[i] = substitute(m, g, pt).widen(group().algebra().base_shape());
  }
  return u;
}

Functional GroupAlgebra::embed_point(const std::vector<Coeff>& g) const {
  std::vector<DualElement> d;
  for (auto& c : g) d.emplace_back(group().algebra().base_shape(), Poly::constant(group().field(), 0, c));
  return embed_point(d);
}

Functional GroupAlgebra::from_values(std::vector<Coeff> values) const {
  if (values.size() != size()) throw Error(Error::Kind::domain, "one value per basis monomial expected");
  Functional u = zero();
  for (std::size_t i = 0; i < size(); ++i) u.values[i].set_part(0, Poly::constant(group().field(), 0, values[i]));
  return u;
}

Functional GroupAlgebra::add(const Functional& u, const Functional& v) const {
  check_(u);
  check_(v);
  Functional r = u;
  for (std::size_t i = 0; i < size(); ++i) r.values[i] += v.values[i];
  return r;
}

Functional GroupAlgebra::scale(const Coeff& c, const Functional& u) const {
  check_(u);
  Functional r = u;
  for (auto& x : r.values) x = x * c;
  return r;
}

Functional GroupAlgebra::convolve(const Functional& u, const Functional& v) const {
  check_(u);
  check_(v);
  Functional r = zero();
  for (std::size_t m = 0; m < size(); ++m)
    for (auto& e : d_->table[m]) r.values[m] += e.c * u.values[e.left] * v.values[e.right];
  return r;
}

DualElement GroupAlgebra::apply(const Functional& u, const Poly& f) const {
  check_(u);
  const PresentedAlgebra& A = group().algebra();
  DualElement nf = A.normal_form(DualElement(A.base_shape(), f));
  DualElement out(A.base_shape(), A.field(), 0);
  const NilShape shape = A.base_shape();
  const auto& masks = shape.masks();
  for (std::size_t k = 0; k < masks.size(); ++k)
    for (auto& t : nf.component(k).terms()) {
      int i = index(t.mono);
      if (i < 0) {
        if (!is_exact() && mono_degree(t.mono) > truncation()) continue;
        throw Error(Error::Kind::domain, "monomial outside the truncation basis");
      }
      DualElement c(A.base_shape(), A.field(), 0);
      c.set_part(masks[k], Poly::constant(A.field(), 0, t.coeff));
      out += c * u.values[i];
    }
  return out;
}

Matrix GroupAlgebra::regular_rep(const Functional& u) const {
  if (!is_exact()) throw Error(Error::Kind::unsupported, "regular representation needs a finite group");
  if (group().irank() != 0) throw Error(Error::Kind::unsupported, "regular representation over k only");
  Matrix L(group().field(), size(), size());
  for (std::size_t j = 0; j < size(); ++j) {
    Functional col = convolve(u, delta(j));
    for (std::size_t i = 0; i < size(); ++i) L.at(i, j) = col.values[i].body().constant_term();
  }
  return L;
}

bool GroupAlgebra::is_unit(const Functional& u) const { return !determinant(regular_rep(u)).is_zero(); }

Transport::Transport(const GroupAlgebra& algebra, std::vector<std::vector<Poly>> f)
    : algebra_(algebra), f_(std::move(f)) {
  const HopfAlgebra& G = algebra_.group();
  if (G.irank() != 0) throw Error(Error::Kind::unsupported, "transport over k only");
  const std::size_t d = f_.size();
  for (auto& row : f_)
    if (row.size() != d) throw Error(Error::Kind::domain, "representation must be a square matrix");
  const PresentedAlgebra& A2 = G.square();
  const std::size_t n = G.ngens();
  const PresentedAlgebra pt = PresentedAlgebra::free(G.field(), {});
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Poly lhs = substitute(f_[i][j], std::vector<DualElement>(G.comul()), A2).body();
      Poly rhs(G.field(), 2 * n);
      for (std::size_t k = 0; k < d; ++k) rhs += f_[i][k].shift(0, 2 * n) * f_[k][j].shift(n, 2 * n);
      Coeff e = substitute(f_[i][j], std::vector<DualElement>(G.counit()), pt).body().constant_term();
      if (A2.normal_form(lhs - rhs) != Poly(G.field(), 2 * n) || e != Coeff::from_int(G.field(), i == j ? 1 : 0))
        throw Error(Error::Kind::domain, "matrix of functions is not a group homomorphism");
    }
}

Matrix Transport::apply(const Functional& u) const {
  const std::size_t d = f_.size();
  Matrix m(algebra_.group().field(), d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m.at(i, j) = algebra_.apply(u, f_[i][j]).body().constant_term();
  return m;
}

bool Transport::verify_multiplicative() const {
  for (std::size_t a = 0; a < algebra_.size(); ++a)
    for (std::size_t b = 0; b < algebra_.size(); ++b) {
      Functional ua = algebra_.delta(a), ub = algebra_.delta(b);
      if (apply(algebra_.convolve(ua, ub)) != apply(ua) * apply(ub)) return false;
    }
  return apply(algebra_.counit()) == Matrix::identity(algebra_.group().field(), f_.size());
}

}  // namespace wx
