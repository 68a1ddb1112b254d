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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weilext/catalog.hh"

using namespace wx;

namespace {

std::vector<Field> test_fields() { return {Field::prime(2), Field::prime(3), Field::prime(5), Field::rationals()}; }

std::vector<Poly> polys(const PresentedAlgebra& R, std::initializer_list<long> cs) {
  std::vector<Poly> v;
  for (long c : cs) v.push_back(Poly::constant(R.field(), R.ngens(), c));
  return v;
}

}  // namespace

TEST_CASE("catalog groups satisfy the Hopf axioms") {
  for (Field f : test_fields()) {
    std::vector<HopfAlgebra> groups{catalog::additive(f), catalog::multiplicative(f),
                                    catalog::by_name("ga2", f), catalog::additive_by_multiplicative(f),
                                    catalog::unipotent3(f), catalog::constant_cyclic(f, 2),
                                    catalog::constant_cyclic(f, 3)};
    for (unsigned n = 1; n <= 6; ++n) groups.push_back(catalog::roots_of_unity(f, n));
    if (!f.is_rational()) {
      groups.push_back(catalog::alpha_p(f));
      groups.push_back(catalog::witt(f, 2));
      groups.push_back(catalog::witt(f, 3));
    }
    for (auto& G : groups) {
      INFO(G.name() << " over " << f.to_string());
      HopfReport r = verify_hopf(G);
      CHECK(r.relations_preserved);
      CHECK(r.coassociative);
      CHECK(r.counital);
      CHECK(r.antipode);
    }
  }
}

TEST_CASE("corrupted antipode is detected") {
  Field q = Field::rationals();
  auto bad = hopf_from_text("bad", q, {"x"}, {}, NfStrategy::free_ring, {"x_1 + x_2"}, {"0"}, {"x"});
  HopfReport r = verify_hopf(bad);
  CHECK(r.coassociative);
  CHECK(r.counital);
  CHECK_FALSE(r.antipode);
  // Comultiplication that does not respect x^2 = 1 in mu_2.
  auto broken = hopf_from_text("broken", q, {"x"}, {"x^2 - 1"}, NfStrategy::rewrite, {"x_1 + x_2"}, {"1"}, {"x"});
  CHECK_FALSE(verify_hopf(broken).relations_preserved);
}

TEST_CASE("smoothness markers") {
  CHECK(catalog::roots_of_unity(Field::prime(3), 4).smooth() == std::optional<bool>(true));
  CHECK_FALSE(catalog::roots_of_unity(Field::prime(2), 4).smooth().has_value());
  CHECK_FALSE(catalog::alpha_p(Field::prime(5)).smooth().has_value());
  CHECK_THROWS_AS(catalog::alpha_p(Field::rationals()), Error);
  CHECK_THROWS_AS(catalog::by_name("nonsense", Field::rationals()), Error);
}

TEST_CASE("Lie algebras of catalog groups") {
  Field q = Field::rationals();
  LieModule ga(catalog::additive(q), 1);
  REQUIRE(ga.dim() == 1);
  CHECK(ga.basis()[0][0].is_one());

  // Over F_p the relation x^p - 1 has zero differential, so d(x) = eps is allowed.
  for (unsigned p : {2u, 3u, 5u}) {
    Field f = Field::prime(p);
    LieModule mu(catalog::roots_of_unity(f, p), 1);
    REQUIRE(mu.dim() == 1);
    CHECK(mu.basis()[0][0].is_one());
    CHECK(LieModule(catalog::alpha_p(f), 2).dim() == 2);
  }
  CHECK(LieModule(catalog::by_name("ga2", q), 2).dim() == 4);
  CHECK(LieModule(catalog::multiplicative(q), 1).dim() == 1);
  CHECK(LieModule(catalog::additive_by_multiplicative(q), 3).dim() == 6);
  CHECK(LieModule(catalog::unipotent3(q), 1).dim() == 3);
  CHECK(LieModule(catalog::constant_cyclic(q, 3), 1).dim() == 0);
  CHECK(LieModule(catalog::witt(Field::prime(3), 3), 1).dim() == 3);
  LieModule gm(catalog::multiplicative(q), 1);
  CHECK(gm.coordinate_gens() == std::vector<std::size_t>{0});
  CHECK(gm.basis()[0][1] == Coeff::from_int(q, -1));
}

TEST_CASE("Lie of Lie: dimensions and coordinate matching") {
  Field f = Field::prime(3);
  for (auto G : {catalog::additive(f), catalog::additive_by_multiplicative(f), catalog::unipotent3(f),
                 catalog::multiplicative(f), catalog::witt(f, 2)}) {
    for (unsigned r : {1u, 2u})
      for (unsigned s : {1u, 2u}) {
        LieModule GI(G, r);
        LieModule direct(G, r * s);
        LieModule iterated(catalog::vector_group(f, GI.dim()), s);
        REQUIRE(direct.dim() == iterated.dim());
        // (b, i, j) on both sides: Lie(G, I (x) J) index b*rs + i*s + j versus
        // Lie(Lie(G,I), J) index (b*r + i)*s + j.
        std::vector<bool> hit(direct.dim(), false);
        for (std::size_t b = 0; b < GI.lie_dim(); ++b)
          for (unsigned i = 0; i < r; ++i)
            for (unsigned j = 0; j < s; ++j) {
              std::size_t src = b * r * s + i * s + j, dst = (b * r + i) * s + j;
              CHECK(src < direct.dim());
              hit[dst] = true;
            }
        CHECK(std::all_of(hit.begin(), hit.end(), [](bool x) { return x; }));
      }
  }
}

TEST_CASE("adjoint action") {
  Field q = Field::rationals();
  for (auto G : {catalog::additive(q), catalog::multiplicative(q), catalog::by_name("ga2", q)}) {
    LieModule L(G, 2);
    auto M = L.adjoint_matrix();
    for (std::size_t i = 0; i < L.dim(); ++i)
      for (std::size_t j = 0; j < L.dim(); ++j)
        CHECK(M[i][j] == Poly::constant(q, G.ngens(), i == j ? 1 : 0));
  }
  // (a,t)(a',t') = (a + t a', t t'): conjugating e + eps(u d_a + v d_t) by
  // (a,t) gives e + eps((t u - a v) d_a + v d_t).
  HopfAlgebra S = catalog::additive_by_multiplicative(q);
  LieModule L(S, 1);
  REQUIRE(L.coordinate_gens() == std::vector<std::size_t>{0, 1});
  auto M = L.adjoint_matrix();
  const auto& A = S.algebra();
  CHECK(M[0][0] == A.parse("t"));
  CHECK(M[0][1] == A.parse("-a"));
  CHECK(M[1][0].is_zero());
  CHECK(M[1][1] == A.parse("1"));
  // Rank two is the Kronecker product with the identity.
  LieModule L2(S, 2);
  auto M2 = L2.adjoint_matrix();
  CHECK(M2[0][0] == A.parse("t"));
  CHECK(M2[0][2] == A.parse("-a"));
  CHECK(M2[1][3] == A.parse("-a"));
  CHECK(M2[0][1].is_zero());
  // U3 acts unipotently: Ad(a,b,c) d_b = d_b + a d_c.
  LieModule U(catalog::unipotent3(q), 1);
  auto MU = U.adjoint_matrix();
  CHECK(MU[2][1] == catalog::unipotent3(q).algebra().parse("a"));
  CHECK(MU[2][0] == catalog::unipotent3(q).algebra().parse("-b"));
}

TEST_CASE("Lie bracket") {
  Field q = Field::rationals();
  PresentedAlgebra pt = PresentedAlgebra::free(q, {});
  LieModule ga(catalog::additive(q), 1);
  CHECK(ga.bracket(polys(pt, {1}), polys(pt, {1}), pt)[0].is_zero());

  LieModule S(catalog::additive_by_multiplicative(q), 1);
  auto da = polys(pt, {1, 0}), dt = polys(pt, {0, 1});
  CHECK(S.bracket(dt, da, pt) == da);
  CHECK(S.bracket(da, dt, pt) == polys(pt, {-1, 0}));
  CHECK(S.bracket(dt, dt, pt) == polys(pt, {0, 0}));

  // Antisymmetry and Jacobi on basis triples.
  for (auto G : {catalog::additive_by_multiplicative(q), catalog::unipotent3(q)}) {
    LieModule L(G, 1);
    const std::size_t d = L.lie_dim();
    auto unit = [&](std::size_t i) {
      std::vector<Poly> v(d, Poly(q, 0));
      v[i] = Poly::constant(q, 0, 1);
      return v;
    };
    auto add = [](std::vector<Poly> a, const std::vector<Poly>& b) {
      for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
      return a;
    };
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        auto xy = L.bracket(unit(i), unit(j), pt), yx = L.bracket(unit(j), unit(i), pt);
        CHECK(add(xy, yx) == std::vector<Poly>(d, Poly(q, 0)));
        for (std::size_t k = 0; k < d; ++k) {
          auto j1 = L.bracket(unit(i), L.bracket(unit(j), unit(k), pt), pt);
          auto j2 = L.bracket(unit(j), L.bracket(unit(k), unit(i), pt), pt);
          auto j3 = L.bracket(unit(k), L.bracket(unit(i), unit(j), pt), pt);
          CHECK(add(add(j1, j2), j3) == std::vector<Poly>(d, Poly(q, 0)));
        }
      }
  }
  // U3: [d_a, d_b] = d_c.
  LieModule U(catalog::unipotent3(q), 1);
  CHECK(U.bracket(polys(pt, {1, 0, 0}), polys(pt, {0, 1, 0}), pt) == polys(pt, {0, 0, 1}));
}

TEST_CASE("exponential") {
  Field q = Field::rationals();
  // G_a over k[eps]: exp(c d) translates by eps c.
  PresentedAlgebra R = PresentedAlgebra::free(q, {"c"});
  LieModule ga(catalog::additive(q), 1);
  Point e = ga.exp({R.var(0)}, NilShape::dual(1), R);
  CHECK(e[0].body().is_zero());
  CHECK(e[0].part(1) == R.var(0));
  CHECK(points_equal(ga.exp({Poly(q, 1)}, NilShape::dual(1), R), ga.group().identity(NilShape::dual(1), R), R));

  // Values that are not a derivation at the identity of G_m.
  LieModule gm(catalog::multiplicative(q), 1);
  std::vector<std::vector<Poly>> bad{{R.var(0), R.var(0)}};
  CHECK_THROWS_AS(gm.exp_values(bad, NilShape::dual(1), R), Error);
}

TEST_CASE("exp is additive and kills I times Lie") {
  for (Field f : {Field::rationals(), Field::prime(3)}) {
    for (auto G : {catalog::additive(f), catalog::additive_by_multiplicative(f), catalog::multiplicative(f)}) {
      for (unsigned r : {1u, 2u}) {
        LieModule L(G, r);
        std::vector<std::string> names;
        for (std::size_t i = 0; i < 2 * L.dim(); ++i) names.push_back("c" + std::to_string(i));
        PresentedAlgebra R = PresentedAlgebra::free(f, names);
        std::vector<Poly> x, y, xy;
        for (std::size_t i = 0; i < L.dim(); ++i) {
          x.push_back(R.var(i));
          y.push_back(R.var(L.dim() + i));
          xy.push_back(R.var(i) + R.var(L.dim() + i));
        }
        NilShape s = NilShape::dual(r);
        CHECK(points_equal(G.multiply(L.exp(x, s, R), L.exp(y, s, R), R), L.exp(xy, s, R), R));
        CHECK(L.log(L.exp(x, s, R), R) == x);
        // i * x for i = eps_k: every eps part picks up a second eps.
        for (unsigned k = 0; k < r; ++k) {
          Point p = L.exp(x, s, R), id = G.identity(s, R);
          DualElement ek = DualElement::param(s, f, R.ngens(), k);
          for (std::size_t g = 0; g < p.size(); ++g) p[g] = id[g] + (p[g] - id[g]) * ek;
          CHECK(points_equal(p, id, R));
        }
      }
    }
  }
}

TEST_CASE("Ad(exp(x eps_i)) x' = x' + eps_i [x, x']") {
  for (Field f : {Field::rationals(), Field::prime(5)}) {
    for (auto G : {catalog::additive(f), catalog::additive_by_multiplicative(f)}) {
      LieModule L1(G, 1);
      const std::size_t d = L1.lie_dim();
      std::vector<std::string> names;
      for (std::size_t i = 0; i < 2 * d; ++i) names.push_back("c" + std::to_string(i));
      PresentedAlgebra R = PresentedAlgebra::free(f, names);
      std::vector<Poly> x, xp;
      for (std::size_t i = 0; i < d; ++i) {
        x.push_back(R.var(i));
        xp.push_back(R.var(d + i));
      }
      auto br = L1.bracket(x, xp, R);
      for (unsigned r : {1u, 2u}) {
        LieModule L(G, r);
        NilShape T = NilShape::tensor(NilShape::dual(r), NilShape::dual(1));
        auto vxp = L1.values(xp, R)[0], vbr = L1.values(br, R)[0];
        for (unsigned i = 0; i < r; ++i) {
          std::vector<Poly> xi(L.dim(), Poly(f, R.ngens()));
          for (std::size_t b = 0; b < d; ++b) xi[b * r + i] = x[b];
          Point g = L.exp(xi, T, R);
          Point q = G.identity(T, R);
          for (std::size_t h = 0; h < q.size(); ++h) q[h].set_part(1u << r, vxp[h]);
          Point c = G.conjugate(g, q, R);
          for (std::size_t h = 0; h < c.size(); ++h) {
            DualElement want = G.identity(T, R)[h];
            want.set_part(1u << r, vxp[h]);
            want.set_part((1u << r) | (1u << i), vbr[h]);
            CHECK(R.normal_form(c[h]) == want);
          }
        }
      }
    }
  }
}

TEST_CASE("pointed maps into a Lie algebra vanish after exp on both sides") {
  Field f = Field::prime(3);
  const std::vector<std::string> family{"x0", "x0^2 + x1", "x0*x1 - x1^2", "x0^3 + 2*x1"};
  for (auto G : {catalog::additive(f), catalog::additive_by_multiplicative(f)}) {
    for (auto H : {catalog::additive(f), catalog::additive_by_multiplicative(f)}) {
      for (unsigned r : {1u, 2u}) {
        LieModule LG(G, r), LH(H, r);
        std::vector<std::string> names;
        for (std::size_t i = 0; i < LG.dim(); ++i) names.push_back("c" + std::to_string(i));
        PresentedAlgebra R = PresentedAlgebra::free(f, names);
        std::vector<Poly> x;
        for (std::size_t i = 0; i < LG.dim(); ++i) x.push_back(R.var(i));
        NilShape s = NilShape::dual(r);
        Point g = LG.exp(x, s, R);
        // phi: coordinates are polynomials in the first two generators of G,
        // normalized to vanish at the identity.
        const std::size_t n = G.ngens();
        std::vector<Poly> first_two{Poly::variable(f, n, 0), Poly::variable(f, n, n > 1 ? 1 : 0)};
        std::vector<Coeff> e;
        for (auto& c : G.counit()) e.push_back(c.body().constant_term());
        std::vector<DualElement> phi;
        for (std::size_t k = 0; k < LH.dim(); ++k) {
          Poly p = Poly::parse(family[k % family.size()], {"x0", "x1"}, f).compose(first_two);
          p = p - Poly::constant(f, n, p.evaluate(e));
          phi.push_back(substitute(p, g, R));
        }
        Point h = H.identity(s, R);
        for (std::size_t gen = 0; gen < H.ngens(); ++gen)
          for (std::size_t b = 0; b < LH.lie_dim(); ++b)
            for (unsigned j = 0; j < r; ++j)
              if (!LH.basis()[b][gen].is_zero())
                h[gen] += DualElement::param(s, f, R.ngens(), j) * phi[b * r + j] * LH.basis()[b][gen];
        CHECK(points_equal(h, H.identity(s, R), R));
      }
    }
  }
}

TEST_CASE("product groups") {
  Field q = Field::rationals();
  auto G = product_group(catalog::additive(q), catalog::additive(q));
  CHECK(G.ngens() == 2);
  CHECK(G.gens()[1] == "x2");
  CHECK(verify_hopf(G).all());
  auto M = product_group(catalog::additive(q), catalog::roots_of_unity(q, 3));
  CHECK(verify_hopf(M).all());
  CHECK(M.comul()[1].body() == M.square().parse("x2_1*x2_2"));
  for (auto& [a, b] : std::vector<std::pair<HopfAlgebra, HopfAlgebra>>{
           {catalog::additive(q), catalog::multiplicative(q)},
           {catalog::additive_by_multiplicative(q), catalog::unipotent3(q)}}) {
    CHECK(LieModule(product_group(a, b), 1).dim() == LieModule(a, 1).dim() + LieModule(b, 1).dim());
  }
}
