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

#include "weilext/algebra.hh"
#include "weilext/groebner.hh"

using namespace wx;

namespace {

Poly random_poly(std::mt19937& rng, Field f, std::size_t nvars, unsigned maxdeg, int nterms) {
  std::uniform_int_distribution<int> coeff(-6, 6);
  std::uniform_int_distribution<unsigned> expo(0, maxdeg);
  std::vector<Term> ts;
  for (int i = 0; i < nterms; ++i) {
    Mono m(nvars);
    for (auto& e : m) e = expo(rng);
    ts.push_back({m, Coeff::from_int(f, coeff(rng))});
  }
  return Poly::from_terms(f, nvars, ts);
}

}  // namespace

TEST_CASE("coefficients normalize") {
  Field f7 = Field::prime(7);
  CHECK(Coeff::from_int(f7, -1).repr() == "6");
  CHECK(Coeff::from_int(f7, 3).inverse() == Coeff::from_int(f7, 5));
  CHECK(Coeff::from_int(f7, 3).to_string() == "3 mod 7");
  Field q = Field::rationals();
  Coeff h = Coeff::from_mpq(q, mpq_class(4, -6));
  CHECK(h.repr() == "-2/3");
  CHECK_THROWS_AS(Coeff::from_mpq(f7, mpq_class(1, 7)), Error);
  CHECK_THROWS_AS(Field::prime(9), Error);
}

TEST_CASE("normal forms in catalog quotients") {
  Field q = Field::rationals();
  std::vector<std::string> xy{"x", "y"};
  PresentedAlgebra gm(q, xy, std::vector<Poly>{Poly::parse("x*y - 1", xy, q)}, NfStrategy::rewrite);
  CHECK(gm.normal_form(gm.parse("x*y")) == gm.parse("1"));

  Field f5 = Field::prime(5);
  PresentedAlgebra ap(f5, {"t"}, std::vector<Poly>{Poly::parse("t^5", {"t"}, f5)}, NfStrategy::rewrite);
  CHECK(ap.normal_form(ap.parse("t^5")).is_zero());

  PresentedAlgebra fr = PresentedAlgebra::free(q, xy);
  Poly s = fr.normal_form(fr.parse("(x+y)^2"));
  CHECK(s.to_string(xy) == "x^2 + 2*x*y + y^2");

  CHECK_THROWS_AS(PresentedAlgebra(q, xy, std::vector<Poly>{Poly::parse("x", xy, q)}, NfStrategy::free_ring), Error);
}

TEST_CASE("buchberger") {
  Field q = Field::rationals();
  std::vector<std::string> xy{"x", "y"};
  auto gb1 = buchberger({Poly::parse("x*y-1", xy, q)});
  REQUIRE(gb1.size() == 1);
  CHECK(gb1[0] == Poly::parse("x*y-1", xy, q));
  CHECK(buchberger({}).empty());

  Poly f = Poly::parse("x^2-y", xy, q), g = Poly::parse("y^2-x", xy, q);
  // Ideal membership certificate: x^4 - x = (x^2+y)(x^2-y) + (y^2-x).
  Poly x4 = Poly::parse("x^4", xy, q), x = Poly::parse("x", xy, q);
  CHECK(x4 - x == Poly::parse("x^2+y", xy, q) * f + g);
  auto gb = buchberger({f, g});
  CHECK(is_groebner(gb));
  CHECK(reduce(x4, gb) == reduce(x, gb));
  CHECK(reduce(x, gb) == x);
}

TEST_CASE("polynomial ring axioms on random triples") {
  std::mt19937 rng(12345);
  for (Field f : {Field::rationals(), Field::prime(3), Field::prime(2147483647)}) {
    for (int it = 0; it < 30; ++it) {
      Poly a = random_poly(rng, f, 3, 3, 4), b = random_poly(rng, f, 3, 3, 4), c = random_poly(rng, f, 3, 3, 4);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * Poly::constant(f, 3, 1) == a);
      CHECK((a - a).is_zero());
    }
  }
}

TEST_CASE("normal form is multiplicative and idempotent") {
  std::mt19937 rng(7);
  Field f = Field::prime(5);
  std::vector<std::string> v{"x", "y", "z"};
  PresentedAlgebra A(f, v,
                     std::vector<Poly>{Poly::parse("x^2 - y*z", v, f), Poly::parse("y^3 - x - 1", v, f)},
                     NfStrategy::groebner);
  CHECK(is_groebner(A.basis()));
  for (int it = 0; it < 25; ++it) {
    Poly a = random_poly(rng, f, 3, 4, 5), b = random_poly(rng, f, 3, 4, 5);
    Poly na = A.normal_form(a), nb = A.normal_form(b);
    CHECK(A.normal_form(na) == na);
    CHECK(A.normal_form(a * b) == A.normal_form(na * nb));
  }
}

TEST_CASE("serialization round trip") {
  Field f = Field::prime(7);
  std::vector<std::string> v{"a", "b"};
  std::mt19937 rng(3);
  for (int it = 0; it < 20; ++it) {
    Poly p = random_poly(rng, f, 2, 4, 5);
    CHECK(Poly::parse(p.to_string(v), v, f) == p);
  }
  Field q = Field::rationals();
  Poly r = Poly::parse("-2/3*a^2*b + 1/2", v, q);
  CHECK(r.to_string(v) == "-2/3*a^2*b + 1/2");
  CHECK_THROWS_AS(Poly::parse("a +* b", v, q), Error);
  CHECK_THROWS_AS(Poly::parse("c", v, q), Error);
}

TEST_CASE("square-zero parameters annihilate each other") {
  Field f = Field::prime(3);
  const std::size_t n = 2;
  NilShape s = NilShape::dual(2);
  std::vector<Poly> monos;
  for (unsigned i = 0; i <= 3; ++i)
    for (unsigned j = 0; i + j <= 3; ++j) monos.push_back(Poly::monomial(f, {i, j}, Coeff::one(f)));
  for (auto& p : monos)
    for (auto& q : monos)
      for (unsigned a = 0; a < 2; ++a)
        for (unsigned b = 0; b < 2; ++b) {
          DualElement u(s, f, n), w(s, f, n);
          u.set_part(1u << a, p);
          w.set_part(1u << b, q);
          CHECK((u * w).is_zero());
        }
  NilShape t = NilShape::tensor(NilShape::dual(1), NilShape::dual(1));
  DualElement e = DualElement::param(t, f, n, 0), e2 = DualElement::param(t, f, n, 1);
  CHECK_FALSE((e * e2).is_zero());
  CHECK((e * e2 * e).is_zero());
}

TEST_CASE("dual split of points") {
  Field f = Field::prime(5);
  // Source: G_a over k[eps] with one generator; target R = k[x0, x1].
  PresentedAlgebra src = PresentedAlgebra::free(f, {"x"}, 1);
  PresentedAlgebra R = PresentedAlgebra::free(f, {"x0", "x1"});
  DualElement img(NilShape::dual(1), R.var(0));
  img.set_part(1, R.var(1));
  DualSplit s = dual_split({{img}, {}}, src, R);
  CHECK(s.bar[0] == R.var(0));
  CHECK(s.parts[0][0] == R.var(1));
  CHECK(dual_join(s, 1)[0] == img);

  // alpha_p counit: t -> 0.
  PresentedAlgebra ap(f, {"t"}, std::vector<Poly>{Poly::parse("t^5", {"t"}, f)}, NfStrategy::rewrite);
  PresentedAlgebra pt = PresentedAlgebra::free(f, {});
  DualSplit c = dual_split({{DualElement(NilShape::dual(1), f, 0)}, {}}, ap, pt);
  CHECK(c.bar[0].is_zero());
  CHECK(c.parts[0][0].is_zero());

  // Rank two.
  PresentedAlgebra R3 = PresentedAlgebra::free(f, {"x0", "x1", "x2"});
  DualElement im2(NilShape::dual(2), R3.var(0));
  im2.set_part(1, R3.var(1));
  im2.set_part(2, R3.var(2));
  PresentedAlgebra src2 = PresentedAlgebra::free(f, {"x"}, 2);
  DualSplit s2 = dual_split({{im2}, {DualElement::param(NilShape::dual(2), f, 3, 0), DualElement::param(NilShape::dual(2), f, 3, 1)}}, src2, R3);
  CHECK(s2.bar[0] == R3.var(0));
  CHECK(s2.parts[0][0] == R3.var(1));
  CHECK(s2.parts[1][0] == R3.var(2));
  CHECK(dual_join(s2, 2)[0] == im2);

  // eps not fixed.
  CHECK_THROWS_AS(dual_split({{im2}, {DualElement(NilShape::dual(2), R3.var(0))}}, src2, R3), Error);
  // Relation not killed: t -> 1 on alpha_p.
  CHECK_THROWS_AS(dual_split({{DualElement(NilShape::dual(1), Poly::constant(f, 0, 1))}, {}}, ap, pt), Error);
}

TEST_CASE("dual split inverts join on random inputs") {
  std::mt19937 rng(99);
  Field f = Field::prime(3);
  PresentedAlgebra src = PresentedAlgebra::free(f, {"x", "y"}, 2);
  PresentedAlgebra R = PresentedAlgebra::free(f, {"a", "b"});
  for (int it = 0; it < 20; ++it) {
    DualSplit s;
    s.parts.assign(2, {});
    for (int g = 0; g < 2; ++g) {
      s.bar.push_back(random_poly(rng, f, 2, 2, 3));
      for (int j = 0; j < 2; ++j) s.parts[j].push_back(random_poly(rng, f, 2, 2, 3));
    }
    DualSplit back = dual_split({dual_join(s, 2), {}}, src, R);
    CHECK(back.bar == s.bar);
    CHECK(back.parts == s.parts);
  }
}

TEST_CASE("normal forms over k[eps] with infinitesimal relations") {
  // ker(x -> x^p - eps x) at p = 3: relation x^3 - eps*x.
  Field f = Field::prime(3);
  DualElement rel(NilShape::dual(1), Poly::parse("x^3", {"x"}, f));
  rel.set_part(1, Poly::parse("-x", {"x"}, f));
  PresentedAlgebra A(f, {"x"}, {rel}, NfStrategy::rewrite, 1);
  CHECK_FALSE(A.rigid_relations());
  DualElement x3(NilShape::dual(1), Poly::parse("x^3", {"x"}, f));
  DualElement want(NilShape::dual(1), f, 1);
  want.set_part(1, Poly::parse("x", {"x"}, f));
  CHECK(A.normal_form(x3) == want);
  // x^4 = x * x^3 = eps x^2.
  DualElement x4(NilShape::dual(1), Poly::parse("x^4", {"x"}, f));
  DualElement want4(NilShape::dual(1), f, 1);
  want4.set_part(1, Poly::parse("x^2", {"x"}, f));
  CHECK(A.normal_form(x4) == want4);
}
