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

#include <random>

#include "weilext/catalog.hh"
#include "weilext/dieudonne.hh"
#include "weilext/witt.hh"

using namespace wx;

namespace {

WittVector constant_vector(Field f, unsigned p, const std::vector<long>& a) {
  std::vector<Poly> c;
  for (long v : a) c.push_back(Poly::constant(f, 1, v));
  return WittVector(p, c);
}

std::vector<long> residues(const WittVector& w) {
  std::vector<long> out;
  for (auto& c : w.components()) out.push_back(c.is_zero() ? 0 : c.constant_term().to_mpq().get_num().get_si());
  return out;
}

Cocycle2 witt_cocycle(Field f, unsigned r = 1) {
  HopfAlgebra Ga = catalog::additive(f);
  std::vector<Poly> v(r, Poly(f, 2));
  v[0] = witt_carry(f, 2, 0, 1);
  return Cocycle2(Ga, r, v);
}

std::vector<Poly> polys(const HopfAlgebra& U, std::initializer_list<const char*> texts) {
  std::vector<Poly> out;
  for (auto t : texts) out.push_back(U.algebra().parse(t));
  return out;
}

}  // namespace

TEST_CASE("Witt vectors: addition in W_2(F_2) and the ghost cross-check") {
  Field f = Field::prime(2);
  auto w = WittPolynomials::over_rationals(2, 2);
  auto wf = w.reduced(f);
  CHECK(residues(constant_vector(f, 2, {1, 0}).add(constant_vector(f, 2, {1, 0}), wf)) == std::vector<long>{0, 1});
  // Over Z: ghost (1, 1) + (1, 1) = (2, 2) is the Witt vector (2, -1).
  auto g = ghost_values(2, {2, -1});
  CHECK(g == std::vector<mpz_class>{2, 2});
}

TEST_CASE("Witt ring axioms on random samples, with ghost components over Q") {
  std::mt19937 rng(11);
  for (unsigned p : {2u, 3u, 5u})
    for (unsigned n : {2u, 3u}) {
      Field f = Field::prime(p);
      auto wq = WittPolynomials::over_rationals(p, n);
      auto wf = wq.reduced(f);
      std::uniform_int_distribution<long> d(0, p - 1);
      for (int trial = 0; trial < 6; ++trial) {
        std::vector<long> a(n), b(n), c(n);
        for (unsigned i = 0; i < n; ++i) a[i] = d(rng), b[i] = d(rng), c[i] = d(rng);
        auto A = constant_vector(f, p, a), B = constant_vector(f, p, b), C = constant_vector(f, p, c);
        CHECK(A.add(B, wf) == B.add(A, wf));
        CHECK(A.mul(B, wf) == B.mul(A, wf));
        CHECK(A.add(B, wf).add(C, wf) == A.add(B.add(C, wf), wf));
        CHECK(A.mul(B, wf).mul(C, wf) == A.mul(B.mul(C, wf), wf));
        CHECK(A.mul(B.add(C, wf), wf) == A.mul(B, wf).add(A.mul(C, wf), wf));
        CHECK(A.add(A.neg(wf), wf) == constant_vector(f, p, std::vector<long>(n, 0)));
        // Ghost map on integer lifts: sums and products go componentwise.
        std::vector<mpz_class> za(a.begin(), a.end()), zb(b.begin(), b.end());
        std::vector<Coeff> point;
        for (long v : a) point.push_back(Coeff::from_int(Field::rationals(), v));
        for (long v : b) point.push_back(Coeff::from_int(Field::rationals(), v));
        std::vector<mpz_class> zs, zp;
        for (unsigned i = 0; i < n; ++i) {
          zs.push_back(wq.sum[i].evaluate(point).to_mpq().get_num());
          zp.push_back(wq.product[i].evaluate(point).to_mpq().get_num());
        }
        auto ga = ghost_values(p, za), gb = ghost_values(p, zb), gs = ghost_values(p, zs), gp = ghost_values(p, zp);
        for (unsigned k = 0; k < n; ++k) {
          CHECK(gs[k] == ga[k] + gb[k]);
          CHECK(gp[k] == ga[k] * gb[k]);
        }
      }
    }
}

TEST_CASE("V then F is multiplication by p on W_3(F_5[x])") {
  Field f = Field::prime(5);
  auto wf = WittPolynomials::over_rationals(5, 3).reduced(f);
  std::vector<Poly> comps = {Poly::parse("x + 1", {"x"}, f), Poly::parse("x^2", {"x"}, f), Poly::parse("2*x", {"x"}, f)};
  WittVector a(5, comps);
  WittVector sum = a;
  for (int i = 1; i < 5; ++i) sum = sum.add(a, wf);
  CHECK(a.verschiebung().frobenius() == sum);
  CHECK(a.frobenius().verschiebung() == sum);
  CHECK_THROWS_AS(a.add(WittVector(5, {comps[0]}), wf), Error);
}

TEST_CASE("normal form in D: FV = VF = p, commutativity") {
  ZModRing r(3, 3);
  auto F = DieudonneElt::F(r), V = DieudonneElt::V(r);
  CHECK(F * V == DieudonneElt::scalar(r, 3));
  CHECK(V * F == F * V);
  CHECK(DieudonneElt::parse("V^2*F^2", r) == DieudonneElt::scalar(r, 9));
  CHECK(DieudonneElt::parse("F*V*F", r) == DieudonneElt::monomial(r, 1, 3));
  ZModRing r2(3, 2);
  auto e = DieudonneElt::parse("3 + F*V*F", r2);
  CHECK(e == DieudonneElt::scalar(r2, 3) + DieudonneElt::monomial(r2, 1, 3));
  CHECK(e.to_string() == "3 + 3*F");
  CHECK(DieudonneElt::parse("V^2*F^2", r2).is_zero());
  CHECK(DieudonneElt::parse("2*(F - p) + V", r2).to_string() == "3 + 2*F + V");
  CHECK_THROWS_AS(DieudonneElt::parse("F +", r2), Error);
  CHECK_THROWS_AS(DieudonneElt::parse("G", r2), Error);

  // Oracle for letter words: a F's and b V's multiply to p^min(a,b) x^(a-b).
  std::mt19937 rng(5);
  ZModRing r5(5, 4);
  for (int trial = 0; trial < 50; ++trial) {
    std::string word = "1";
    int a = 0, b = 0;
    for (int i = std::uniform_int_distribution<int>(0, 7)(rng); i > 0; --i) {
      bool isF = rng() % 2 == 0;
      word += isF ? "*F" : "*V";
      (isF ? a : b)++;
    }
    std::int64_t c = 1;
    for (int i = 0; i < std::min(a, b); ++i) c *= 5;
    CHECK(DieudonneElt::parse(word, r5) == DieudonneElt::monomial(r5, a - b, c));
  }
}

TEST_CASE("windows of D/DV^n") {
  ZModRing r(2, 2);
  for (unsigned D : {1u, 3u, 4u}) {
    // k[F]/F^{D+1}; and D/DV^2 by hand: V e has order p, x^0..x^{D-1} order
    // p^2, F^D e order p (p F^D e = F^{D+1} V e is cut off).
    CHECK(DModule::d_mod_vn(r, 1).window(D).module.length() == D + 1);
    CHECK(DModule::d_mod_vn(r, 2).window(D).module.length() == 2 * D + 2);
  }
  DWindow w = DModule::d_mod_vn(r, 2).window(3);
  ZVec e = w.module.unit(w.index(0, 0));
  // p e = F V e.
  ZVec pe = e;
  for (auto& x : pe) x = r.mul(x, 2);
  ZVec fve = w.act(DieudonneElt::parse("F*V", r), e);
  std::vector<ZVec> diff = {pe};
  for (std::size_t i = 0; i < pe.size(); ++i) diff[0][i] = r.reduce(pe[i] - fve[i]);
  CHECK(w.module.is_zero_element(diff[0]));
  CHECK(w.module.is_zero_element(w.act(DieudonneElt::parse("V^2", r), e)));
  CHECK(!w.module.is_zero_element(w.act(DieudonneElt::parse("V", r), e)));
}

TEST_CASE("Hom between standard modules") {
  ZModRing r(3, 2);
  const unsigned D = 3;
  for (unsigned n : {1u, 2u, 3u}) {
    DModule M = DModule::d_mod_vn(r, n);
    CHECK(hom_d(M, M, D).length == M.window(D).module.length());
  }
  DModule M1 = DModule::d_mod_vn(r, 1), M2 = DModule::d_mod_vn(r, 2);
  DHomSpace h = hom_d(M1, M2, D);
  ZVec ve = h.target.module.unit(h.target.index(0, -1));
  CHECK(h.contains({ve}));
  CHECK(!h.contains({h.target.module.unit(h.target.index(0, 0))}));
  // Hom(D/DV, D/DV) against the additive polynomials of G_a.
  UnipotentModule Ga = dieudonne_of_unipotent(catalog::additive(Field::prime(3)), 1, D);
  CHECK(hom_d(M1, M1, D).length == Ga.module().length());
  CHECK(hom_d(M1, M1, D).length == D + 1);
}

TEST_CASE("Lie functor on standard modules") {
  ZModRing r(5, 3);
  Field f = Field::prime(5);
  for (unsigned n : {1u, 2u, 3u}) {
    DModule M = DModule::d_mod_vn(r, n);
    LieImage L = lie_functor(M);
    CHECK(L.module.ngens() == n);
    CHECK(L.module.vbounds() == std::vector<unsigned>(n, 1));
    Matrix shift(f, n, n);
    for (unsigned i = 0; i + 1 < n; ++i) shift.at(i + 1, i) = Coeff::one(f);
    CHECK(L.v_action == shift);
    CHECK(L.f_action.is_zero());
    Matrix diag(f, n, n);
    for (unsigned i = 0; i < n; ++i) diag.at(i, i) = Coeff::from_int(f, 3);
    CHECK(L.scalar_action(3 + 25) == diag);
    CHECK(lie_of_endomorphism(M, {{DieudonneElt::F(r)}}).is_zero());
    CHECK(lie_of_endomorphism(M, {{DieudonneElt::scalar(r, 8)}}) == diag);
  }
  // Additivity and multiplicativity on sampled endomorphisms.
  DModule A = DModule::d_mod_vn(r, 2), B = DModule::d_mod_vn(r, 3);
  CHECK(lie_functor(A.direct_sum(B)).module.ngens() == 5);
  CHECK(lie_functor(DModule::alpha_p(r)).module.ngens() == 1);
  CHECK(lie_functor(DModule::zero(r)).module.ngens() == 0);
  std::vector<std::string> words = {"2 + V", "V^2 + F", "1 + 3*V + F^2", "p + V*F*V", "4*V"};
  for (auto& a : words)
    for (auto& b : words) {
      auto da = DieudonneElt::parse(a, r), db = DieudonneElt::parse(b, r);
      Matrix La = lie_of_endomorphism(B, {{da}}), Lb = lie_of_endomorphism(B, {{db}});
      CHECK(lie_of_endomorphism(B, {{da * db}}) == La * Lb);
    }
  CHECK_THROWS_AS(DModule(r, {0}), Error);
}

TEST_CASE("smoothness of D-modules") {
  ZModRing r(2, 3);
  for (unsigned n : {1u, 2u, 3u}) CHECK(is_smooth(DModule::d_mod_vn(r, n), 4));
  CHECK(!is_smooth(DModule::alpha_p(r), 4));
  CHECK(is_smooth(DModule::zero(r), 4));
  CHECK(!is_smooth(DModule::d_mod_vn(r, 2).direct_sum(DModule::alpha_p(r)), 4));
}

TEST_CASE("M(G_a) with Witt length 1 is spanned by Frobenius powers") {
  for (unsigned p : {2u, 3u, 5u}) {
    Field f = Field::prime(p);
    HopfAlgebra Ga = catalog::additive(f);
    const unsigned D = 3;
    UnipotentModule M = dieudonne_of_unipotent(Ga, 1, D);
    REQUIRE(M.generators().size() == D + 1);
    CHECK(M.module().length() == D + 1);
    CHECK(M.warnings().empty());
    Poly x = Poly::variable(f, 1, 0), y = Poly::variable(f, 2, 1), x2 = Poly::variable(f, 2, 0);
    unsigned q = 1;
    for (unsigned i = 0; i <= D; ++i, q *= p) {
      CHECK(M.generators()[i][0] == x.pow(q));
      // Brute homomorphism check by composition.
      std::vector<Poly> sum = {x2 + y};
      CHECK(M.generators()[i][0].compose(sum) == x2.pow(q) + y.pow(q));
    }
    UnipotentModule upper = dieudonne_of_unipotent(Ga, 1, D + 1);
    ModuleMap F = frobenius_map(M, upper);
    for (unsigned i = 0; i <= D; ++i) CHECK(F.apply(M.module().unit(i)) == upper.module().unit(i + 1));
    CHECK(is_smooth(M));
    CHECK_THROWS_AS(M.coordinates({x.pow(q * p)}), Error);
    CHECK_THROWS_AS(M.coordinates({x.pow(6) + x}), Error);
  }
}

TEST_CASE("M(W_2) with Witt length 2 contains the identity and D/DV^2") {
  Field f = Field::prime(2);
  HopfAlgebra W2 = catalog::witt(f, 2);
  const unsigned D = 3;
  UnipotentModule M = dieudonne_of_unipotent(W2, 2, D);
  auto id = polys(W2, {"x0", "x1"});
  ZVec c = M.coordinates(id);
  CHECK(M.element(c) == id);
  const ZModRing& r = M.module().ring();
  auto times = [&](const ZVec& v, std::int64_t a) {
    ZVec w = v;
    for (auto& x : w) x = r.mul(x, a);
    return w;
  };
  auto minus = [&](const ZVec& a, const ZVec& b) {
    ZVec w(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) w[i] = r.reduce(a[i] - b[i]);
    return w;
  };
  ZVec Vid = M.verschiebung().apply(r, c);
  CHECK(M.element(Vid) == polys(W2, {"0", "x0"}));
  CHECK(M.module().is_zero_element(M.verschiebung().apply(r, Vid)));
  CHECK(!M.module().is_zero_element(times(c, 2)));
  CHECK(M.module().is_zero_element(times(c, 4)));
  // p id = V F id.
  ZVec VFid = M.verschiebung().apply(r, M.coordinates(polys(W2, {"x0^2", "x1^2"})));
  CHECK(M.module().is_zero_element(minus(times(c, 2), VFid)));
  // The D-span of the identity is the whole window: F^b id for b <= D and
  // V F^b id for b <= D + 1.
  std::vector<ZVec> span;
  unsigned q = 1;
  for (unsigned b = 0; b <= D + 1; ++b, q *= 2) {
    std::string e = std::to_string(q);
    if (b <= D) span.push_back(M.coordinates(polys(W2, {("x0^" + e).c_str(), ("x1^" + e).c_str()})));
    span.push_back(M.coordinates(polys(W2, {"0", ("x0^" + e).c_str()})));
  }
  CHECK(M.module().span_length(span) == M.module().length());
  CHECK(M.module().length() == 2 * D + 3);
  CHECK(is_smooth(M));
}

TEST_CASE("M of a product is the direct sum") {
  for (unsigned p : {2u, 3u}) {
    Field f = Field::prime(p);
    HopfAlgebra Ga = catalog::additive(f), W2 = catalog::witt(f, 2);
    for (unsigned m : {1u, 2u}) {
      const unsigned D = 2;
      unsigned a = dieudonne_of_unipotent(Ga, m, D).module().length();
      unsigned b = dieudonne_of_unipotent(W2, m, D).module().length();
      UnipotentModule P = dieudonne_of_unipotent(product_group(Ga, W2), m, D);
      CHECK(P.module().length() == a + b);
      CHECK(is_smooth(P));
      CHECK(dieudonne_of_unipotent(catalog::vector_group(f, 2), m, D).module().length() == 2 * a);
    }
  }
}

TEST_CASE("M is exact on 0 -> G_a -> W_2 -> G_a -> 0") {
  Field f = Field::prime(2);
  HopfAlgebra Ga = catalog::additive(f), W2 = catalog::witt(f, 2);
  const unsigned D = 4;
  UnipotentModule left = dieudonne_of_unipotent(Ga, 2, D), mid = dieudonne_of_unipotent(W2, 2, D);
  // x -> (0, x) has weight p, so the kernel window is one F-step smaller.
  UnipotentModule right = dieudonne_of_unipotent(Ga, 2, D - 1);
  ModuleMap restrict_first = induced_map(left, mid, polys(W2, {"x0"}));
  ModuleMap along_v = induced_map(mid, right, polys(Ga, {"0", "x"}));
  CHECK(left.module().length() == 6);
  CHECK(mid.module().length() == 11);
  CHECK(right.module().length() == 5);
  CHECK(restrict_first.well_defined());
  CHECK(along_v.well_defined());
  CHECK(restrict_first.injective());
  CHECK(along_v.surjective());
  CHECK(compose(along_v, restrict_first).is_zero());
  CHECK(restrict_first.image_length() == along_v.kernel_length());
}

TEST_CASE("classification of deformations of G_a") {
  for (unsigned p : {2u, 3u}) {
    Field f = Field::prime(p);
    HopfAlgebra Ga = catalog::additive(f);
    const unsigned D = p == 2 ? 3 : 2;
    CAPTURE(p);
    DIExtension trivial = classify(deform(Cocycle2::zero(Ga, 1)), 2, D);
    CHECK(trivial.exact);
    CHECK(trivial.lie_certified);
    CHECK(trivial.lie_dim_sub == 1);
    CHECK(trivial.splitting.has_value());
    CHECK(trivial.middle.module().length() == 2 * trivial.sub.module().length());

    DIExtension witt = classify(deform(witt_cocycle(f)), 2, D);
    CHECK(witt.exact);
    CHECK(witt.lie_certified);
    CHECK(!witt.splitting.has_value());
    CHECK(witt.middle.module().length() == witt.sub.module().length() + witt.quotient.module().length());
    CHECK(witt.middle.module().invariants().back() == 2);

    DIExtension rank2 = classify(deform(witt_cocycle(f, 2)), 2, D);
    CHECK(rank2.exact);
    CHECK(rank2.lie_dim_quotient == 2);
    CHECK(rank2.lie_certified);
    CHECK(!rank2.splitting.has_value());
  }
}

TEST_CASE("a splitting found by the search is a V-equivariant section") {
  Field f = Field::prime(3);
  DIExtension e = classify(deform(Cocycle2::zero(catalog::additive(f), 1)), 2, 2);
  REQUIRE(e.splitting);
  const ZModRing& r = e.middle.module().ring();
  for (std::size_t j = 0; j < e.splitting->size(); ++j) {
    ZVec back = e.projection.apply((*e.splitting)[j]);
    back[j] = r.reduce(back[j] - 1);
    CHECK(e.quotient.module().is_zero_element(back));
  }
}

TEST_CASE("unsupported inputs for M") {
  Field f = Field::prime(3);
  CHECK_THROWS_AS(dieudonne_of_unipotent(catalog::multiplicative(f), 1, 2), Error);
  CHECK_THROWS_AS(dieudonne_of_unipotent(catalog::additive(f), 3, 2), Error);
  CHECK_THROWS_AS(dieudonne_of_unipotent(catalog::additive(Field::rationals()), 1, 2), Error);
  CHECK_THROWS_AS(is_smooth(dieudonne_of_unipotent(catalog::additive(f), 1, 0)), Error);
  try {
    dieudonne_of_unipotent(catalog::alpha_p(f), 1, 2);
    FAIL("alpha_p accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == Error::Kind::unsupported);
  }
}
