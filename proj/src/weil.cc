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

#include "weilext/weil.hh"

#include "weilext/groebner.hh"

namespace wx {

namespace {

// Component j of an element of R[I]: 0 is the body, j >= 1 the eps_j part.
const Poly& graded(const DualElement& d, unsigned j) { return j == 0 ? d.body() : d.part(1u << (j - 1)); }

std::vector<std::string> split_names(const HopfAlgebra& G) {
  std::vector<std::string> names;
  for (auto& g : G.gens())
    for (unsigned j = 0; j <= G.irank(); ++j) names.push_back(g + "_" + std::to_string(j));
  return names;
}

std::vector<std::string> doubled(const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (int c = 1; c <= 2; ++c)
    for (auto& n : names) out.push_back(n + "_" + std::to_string(c));
  return out;
}

}  // namespace

WeilRestriction::WeilRestriction(HopfAlgebra source) : source_(source), result_(source) {
  const Field k = source_.field();
  const unsigned r = source_.irank();
  const std::size_t n = source_.ngens(), N = n * (r + 1);
  const auto names = split_names(source_);
  const PresentedAlgebra F1 = PresentedAlgebra::free(k, names), F2 = PresentedAlgebra::free(k, doubled(names));
  const NilShape k0 = NilShape::dual(0);

  std::vector<Poly> rels;
  for (auto& rel : source_.algebra().relations()) {
    DualElement d = substitute(rel, split_point(F1, 0), F1);
    for (unsigned j = 0; j <= r; ++j)
      if (!graded(d, j).is_zero()) rels.push_back(graded(d, j));
  }
  PresentedAlgebra E(k, names, rels, rels.empty() ? NfStrategy::free_ring : NfStrategy::groebner);

  Point uv = split_point(F2, 0), v = split_point(F2, N);
  uv.insert(uv.end(), v.begin(), v.end());
  std::vector<DualElement> comul, counit, antipode;
  for (std::size_t g = 0; g < n; ++g) {
    DualElement c = substitute(source_.comul()[g], uv, F2);
    DualElement s = substitute(source_.antipode()[g], split_point(F1, 0), F1);
    for (unsigned j = 0; j <= r; ++j) {
      comul.emplace_back(k0, graded(c, j));
      counit.emplace_back(k0, Poly::constant(k, 0, graded(source_.counit()[g], j).constant_term()));
      antipode.emplace_back(k0, graded(s, j));
    }
  }
  result_ = HopfAlgebra("h_*" + source_.name(), std::move(E), std::move(comul), std::move(counit), std::move(antipode))
                .with_smooth(source_.smooth());
}

Point WeilRestriction::split_point(const PresentedAlgebra& R, std::size_t offset) const {
  const unsigned r = rank();
  const NilShape s = NilShape::dual(r);
  Point p;
  for (std::size_t g = 0; g < source_.ngens(); ++g) {
    DualElement x(s, R.var(offset + index(g, 0)));
    for (unsigned j = 1; j <= r; ++j) x.set_part(1u << (j - 1), R.var(offset + index(g, j)));
    p.push_back(std::move(x));
  }
  return p;
}

std::vector<Poly> WeilRestriction::split(const DualElement& f) const {
  const PresentedAlgebra F = PresentedAlgebra::free(source_.field(), result_.gens());
  DualElement d = substitute(f, split_point(F, 0), F);
  std::vector<Poly> out;
  for (unsigned j = 0; j <= rank(); ++j) out.push_back(graded(d, j));
  return out;
}

std::vector<DualElement> WeilRestriction::projection() const {
  std::vector<DualElement> out;
  for (std::size_t g = 0; g < source_.ngens(); ++g)
    out.emplace_back(NilShape::dual(0), result_.algebra().var(index(g, 0)));
  return out;
}

Point WeilRestriction::to_result(const Point& p, const PresentedAlgebra& R) const {
  if (p.size() != source_.ngens()) throw Error(Error::Kind::domain, "point arity mismatch");
  Point y;
  for (auto& x : p) {
    if (!(x.shape() == NilShape::dual(rank()))) throw Error(Error::Kind::domain, "expected an R[I]-point");
    DualElement nx = R.normal_form(x);
    for (unsigned j = 0; j <= rank(); ++j) y.emplace_back(NilShape::dual(0), graded(nx, j));
  }
  return y;
}

Point WeilRestriction::from_result(const Point& y, const PresentedAlgebra& R) const {
  if (y.size() != result_.ngens()) throw Error(Error::Kind::domain, "point arity mismatch");
  Point p;
  for (std::size_t g = 0; g < source_.ngens(); ++g) {
    DualElement x(NilShape::dual(rank()), y[index(g, 0)].body());
    for (unsigned j = 1; j <= rank(); ++j) x.set_part(1u << (j - 1), y[index(g, j)].body());
    p.push_back(R.normal_form(x));
  }
  return p;
}

std::vector<DualElement> weil_restrict_morphism(const WeilRestriction& source, const WeilRestriction& target,
                                                const std::vector<DualElement>& comorphism) {
  if (comorphism.size() != target.source().ngens() || source.rank() != target.rank())
    throw Error(Error::Kind::domain, "morphism does not match the restricted groups");
  std::vector<DualElement> out;
  const PresentedAlgebra& E = source.result().algebra();
  for (auto& f : comorphism) {
    auto parts = source.split(f);
    for (auto& p : parts) out.emplace_back(NilShape::dual(0), E.normal_form(p));
  }
  return out;
}

Point beta_apply(const WeilRestriction& w, const Point& y, const PresentedAlgebra& R) {
  if (y.size() != w.result().ngens()) throw Error(Error::Kind::domain, "point arity mismatch");
  const unsigned r = w.rank();
  Point out;
  for (std::size_t g = 0; g < w.source().ngens(); ++g) {
    DualElement x = y[w.index(g, 0)];
    for (unsigned j = 1; j <= r; ++j)
      x += DualElement::param(x.shape(), R.field(), R.ngens(), j - 1) * y[w.index(g, j)];
    out.push_back(R.normal_form(x));
  }
  return out;
}

Point alpha_apply(const WeilRestriction& w, const std::vector<Poly>& g, const PresentedAlgebra& R) {
  if (g.size() != w.source().ngens()) throw Error(Error::Kind::domain, "point arity mismatch");
  Point y;
  for (auto& x : g) {
    y.emplace_back(NilShape::dual(0), x);
    for (unsigned j = 1; j <= w.rank(); ++j) y.emplace_back(NilShape::dual(0), R.field(), R.ngens());
  }
  return y;
}

namespace {

// Echelon form of relations whose bodies are affine: each nonzero body gets a
// distinct leading monomial absent from the others; rows with zero body drop.
std::vector<DualElement> echelon_bodies(std::vector<DualElement> rows) {
  std::vector<DualElement> done;
  while (!rows.empty()) {
    std::erase_if(rows, [](const DualElement& d) { return d.body().is_zero(); });
    if (rows.empty()) break;
    DualElement pivot = rows.back();
    rows.pop_back();
    pivot = pivot * pivot.body().lead().coeff.inverse();
    const Mono lead = pivot.body().lead().mono;
    for (auto* set : {&rows, &done})
      for (auto& d : *set) {
        const Coeff c = d.body().coefficient(lead);
        if (!c.is_zero()) d -= pivot * c;
      }
    done.push_back(std::move(pivot));
  }
  return done;
}

}  // namespace

KernelL kernel_L(const WeilRestriction& w) {
  const HopfAlgebra& E = w.result();
  const Field k = E.field();
  const unsigned r = w.rank();
  const NilShape s = NilShape::dual(r);
  const std::size_t N = E.ngens();
  std::vector<DualElement> rels, fixes;
  std::vector<Poly> bodies;
  for (auto& rel : E.algebra().relations()) {
    rels.emplace_back(s, rel.body());
    bodies.push_back(rel.body());
  }
  // y_0 + sum eps_j y_j = e, i.e. body y_0 - e_bar and parts y_j - e_j.
  const PresentedAlgebra F = PresentedAlgebra::free(k, E.gens(), r);
  Point elim;
  for (std::size_t g = 0; g < w.source().ngens(); ++g) {
    const DualElement& e = w.source().counit()[g];
    auto eps_part = [&](unsigned j) {
      return Poly::constant(k, N, e.part(1u << (j - 1)).constant_term());
    };
    DualElement rel(s, F.var(w.index(g, 0)) - Poly::constant(k, N, e.body().constant_term()));
    DualElement y0(s, Poly::constant(k, N, e.body().constant_term()));
    for (unsigned j = 1; j <= r; ++j) {
      rel.set_part(1u << (j - 1), F.var(w.index(g, j)) - eps_part(j));
      y0.set_part(1u << (j - 1), eps_part(j) - F.var(w.index(g, j)));
    }
    bodies.push_back(rel.body());
    fixes.push_back(rel);
    rels.push_back(std::move(rel));
    elim.push_back(std::move(y0));
    for (unsigned j = 1; j <= r; ++j) elim.emplace_back(s, F.var(w.index(g, j)));
  }
  PresentedAlgebra fibre(k, E.gens(), bodies, NfStrategy::groebner);

  KernelL out{std::move(rels), std::nullopt, std::move(fibre), {}, 0};
  for (auto& b : out.special_fibre.basis())
    if (b.total_degree() == 1) ++out.free_dimension;
  out.free_dimension = N - out.free_dimension;

  if (w.source().algebra().rigid_relations()) {
    std::vector<DualElement> rows;
    for (auto& rel : E.algebra().relations()) rows.push_back(substitute(rel.body(), elim, F));
    rows = echelon_bodies(std::move(rows));
    rows.insert(rows.end(), fixes.begin(), fixes.end());
    out.presentation.emplace(k, E.gens(), std::move(rows), NfStrategy::rewrite, r);
  }

  LieModule lie(w.source().special_fibre(), r);
  for (std::size_t b = 0; b < lie.lie_dim(); ++b)
    for (unsigned j = 1; j <= r; ++j) out.lie_generators.push_back(w.index(lie.coordinate_gens()[b], j));
  return out;
}

ICompatible make_icompatible(const std::vector<std::vector<Coeff>>& on_m,
                             const std::vector<std::vector<std::vector<Coeff>>>& on_eps) {
  const std::size_t r = on_eps.size();
  if (r == 0) throw Error(Error::Kind::domain, "I-compatibility needs I of positive rank");
  ICompatible v;
  const std::size_t size = on_m.size();
  v.parts.assign(r, {});
  for (std::size_t m = 0; m < size; ++m) {
    if (on_m[m].size() != r || on_eps[0].size() != size) throw Error(Error::Kind::domain, "raw map has the wrong shape");
    v.bar.push_back(on_eps[0][m][0]);
    for (std::size_t j = 0; j < r; ++j) {
      v.parts[j].push_back(on_m[m][j]);
      for (std::size_t i = 0; i < r; ++i) {
        const Coeff want = i == j ? v.bar[m] : Coeff::zero(v.bar[m].field());
        if (on_eps[j].at(m).at(i) != want)
          throw Error(Error::Kind::domain, "map is not I-compatible: v(eps m) != eps v_bar(m)");
      }
    }
  }
  return v;
}

ICompatible diamond(const GroupAlgebra& GA, const ICompatible& v, const ICompatible& w) {
  const unsigned r = GA.group().irank();
  const std::size_t size = GA.size();
  auto check = [&](const ICompatible& x) {
    if (x.bar.size() != size || x.parts.size() != r) throw Error(Error::Kind::domain, "I-compatible map of the wrong shape");
    for (auto& p : x.parts)
      if (p.size() != size) throw Error(Error::Kind::domain, "I-compatible map of the wrong shape");
  };
  check(v);
  check(w);
  const Field k = GA.group().field();
  ICompatible out{std::vector<Coeff>(size, Coeff::zero(k)), std::vector<std::vector<Coeff>>(r, std::vector<Coeff>(size, Coeff::zero(k)))};
  for (std::size_t m = 0; m < size; ++m)
    for (auto& e : GA.sweedler(m)) {
      const Coeff c0 = e.c.body().constant_term();
      const Coeff bb = v.bar[e.left] * w.bar[e.right];
      out.bar[m] += c0 * bb;
      for (unsigned j = 0; j < r; ++j) {
        out.parts[j][m] += c0 * (v.bar[e.left] * w.parts[j][e.right] + v.parts[j][e.left] * w.bar[e.right]);
        out.parts[j][m] += e.c.part(1u << j).constant_term() * bb;
      }
    }
  return out;
}

Functional theta(const GroupAlgebra& GA, const ICompatible& v) {
  Functional u = GA.zero();
  const Field k = GA.group().field();
  for (std::size_t m = 0; m < GA.size(); ++m) {
    u.values[m].set_part(0, Poly::constant(k, 0, v.bar.at(m)));
    for (unsigned j = 0; j < GA.group().irank(); ++j) u.values[m].set_part(1u << j, Poly::constant(k, 0, v.parts.at(j).at(m)));
  }
  return u;
}

ICompatible theta_inverse(const GroupAlgebra& GA, const Functional& u) {
  ICompatible v;
  v.parts.assign(GA.group().irank(), {});
  for (std::size_t m = 0; m < GA.size(); ++m) {
    v.bar.push_back(u.values.at(m).body().constant_term());
    for (unsigned j = 0; j < GA.group().irank(); ++j) v.parts[j].push_back(u.values[m].part(1u << j).constant_term());
  }
  return v;
}

ICompatible diamond_unit(const GroupAlgebra& GA) { return theta_inverse(GA, GA.counit()); }

}  // namespace wx
