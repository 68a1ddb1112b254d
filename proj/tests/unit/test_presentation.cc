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
#include "weilext/presentation.hh"

using namespace wx;

namespace {

bool same_group(const HopfAlgebra& a, const HopfAlgebra& b) {
  return a.field() == b.field() && a.irank() == b.irank() && a.gens() == b.gens() &&
         a.algebra().relations() == b.algebra().relations() && a.comul() == b.comul() &&
         a.counit() == b.counit() && a.antipode() == b.antipode();
}

// Catalog groups store unreduced images; compare against reduced ones.
HopfAlgebra reduced(const HopfAlgebra& G) {
  std::vector<DualElement> c, s;
  for (auto& e : G.comul()) c.push_back(G.square().normal_form(e));
  for (auto& e : G.antipode()) s.push_back(G.algebra().normal_form(e));
  return HopfAlgebra(G.name(), G.algebra(), c, G.counit(), s);
}

const char* kGa = R"(# additive group
BASE
Fp 3

GENERATORS
x

COMUL
x = x_1 + x_2
COUNIT
x = 0
ANTIPODE
x = -x
)";

}  // namespace

TEST_CASE("catalog groups survive print then parse") {
  for (unsigned p : {0u, 2u, 3u, 5u}) {
    Field f = p ? Field::prime(p) : Field::rationals();
    for (auto name : {"ga", "gm", "mu1", "mu4", "alpha_p", "w2", "w3", "ga2", "ga_gm", "u3", "z3"}) {
      CAPTURE(name);
      if (f.is_rational() && (name[0] == 'w' || name[0] == 'a')) continue;  // characteristic p only
      HopfAlgebra G = catalog::by_name(name, f);
      const std::string text = print_group(G);
      Presentation back = parse_presentation(text, G.name());
      CAPTURE(text);
      CHECK(back.group.algebra().basis() == G.algebra().basis());
      CHECK(same_group(back.group, reduced(G)));
      CHECK(print_group(back.group) == text);
      CHECK(verify_hopf(back.group).all());
    }
  }
}

TEST_CASE("hand-written file parses to the additive group") {
  Presentation p = parse_presentation(kGa, "ga");
  CHECK(same_group(p.group, catalog::additive(Field::prime(3))));
  CHECK(p.group.name() == "ga");
  CHECK_FALSE(p.cocycle);
  CHECK_FALSE(p.rigidification);
  CHECK_FALSE(p.group.smooth());
}

TEST_CASE("malformed files are parse errors") {
  auto kind_of = [](const std::string& text) {
    try {
      parse_presentation(text, "g");
    } catch (const Error& e) {
      return e.kind();
    }
    return Error::Kind::config;  // sentinel: no error
  };
  const std::string ga = kGa;
  CHECK(kind_of(ga + "EXTRA\nx = 1\n") == Error::Kind::parse);
  CHECK(kind_of(ga + "COMUL\nx = x_1\n") == Error::Kind::parse);
  CHECK(kind_of("GENERATORS\nx\n") == Error::Kind::parse);
  CHECK(kind_of("x\nBASE\nQ\n") == Error::Kind::parse);
  std::string bad = ga;
  bad.replace(bad.find("x_1 + x_2"), 9, "x_1 + y_2");
  CHECK(kind_of(bad) == Error::Kind::parse);
  bad = ga;
  bad.replace(bad.find("ANTIPODE\nx = -x"), 15, "ANTIPODE\ny = -x");
  CHECK(kind_of(bad) == Error::Kind::parse);
  bad = ga;
  bad.replace(bad.find("Fp 3"), 4, "Fp 4");
  CHECK(kind_of(bad) == Error::Kind::parse);
  bad = ga;
  bad.replace(bad.find("GENERATORS\nx"), 12, "GENERATORS\neps1");
  CHECK(kind_of(bad) == Error::Kind::parse);
  CHECK(kind_of(ga + "COCYCLE\nx = eps1*(x_1*x_2)\n") == Error::Kind::parse);  // no rank
}

TEST_CASE("products of eps symbols vanish") {
  std::string text = R"(BASE
Fp 5
I rank 2
GENERATORS
x
COMUL
x = x_1 + x_2 + eps1*eps2*x_1 + eps1^2*x_2 + eps2*x_1*x_2
COUNIT
x = 0
ANTIPODE
x = -x
)";
  Presentation p = parse_presentation(text, "g");
  const DualElement& d = p.group.comul()[0];
  Field f = Field::prime(5);
  CHECK(d.body() == Poly::parse("x_1 + x_2", p.group.square().gens(), f));
  CHECK(d.part(1).is_zero());
  CHECK(d.part(2) == Poly::parse("x_1*x_2", p.group.square().gens(), f));
  CHECK(print_group(parse_presentation(print_group(p.group), "g").group) == print_group(p.group));
}

TEST_CASE("cocycle section gives Lie coordinates") {
  Field f = Field::prime(2);
  std::string text = std::string(kGa).replace(std::string(kGa).find("Fp 3"), 4, "Fp 2\nI rank 1") +
                     "COCYCLE\nx = eps1*(x_1*x_2)\n";
  Presentation p = parse_presentation(text, "ga");
  REQUIRE(p.cocycle);
  CHECK(p.group.irank() == 0);
  CHECK(p.cocycle->rank() == 1);
  CHECK(p.cocycle->coords() == std::vector<Poly>{witt_carry(f, 2, 0, 1)});
  CHECK(check_cocycle(*p.cocycle));
  Presentation back = parse_presentation(print_presentation(p), "ga");
  REQUIRE(back.cocycle);
  CHECK(*back.cocycle == *p.cocycle);
  CHECK(print_presentation(back) == print_presentation(p));

  std::string body = text;
  body.replace(body.find("eps1*(x_1*x_2)"), 14, "x_1*x_2");
  CHECK_THROWS_AS(parse_presentation(body, "ga"), Error);
}

TEST_CASE("rank two cocycle on the plane") {
  Field f = Field::prime(3);
  HopfAlgebra G = catalog::vector_group(f, 2);
  std::string text = print_group(G);
  text.replace(text.find("Fp 3"), 4, "Fp 3\nI rank 2");
  text += "\nCOCYCLE\nx1 = eps2*(x1_1*x2_2)\nx2 = eps1*(x2_1*x1_2)\n";
  Presentation p = parse_presentation(text, "ga2");
  REQUIRE(p.cocycle);
  // Coordinates are ordered (Lie basis index, eps index).
  const auto& c = p.cocycle->coords();
  const auto& sq = G.square().gens();
  REQUIRE(c.size() == 4);
  CHECK(c[0].is_zero());
  CHECK(c[1] == Poly::parse("x1_1*x2_2", sq, f));
  CHECK(c[2] == Poly::parse("x2_1*x1_2", sq, f));
  CHECK(c[3].is_zero());
  CHECK(check_cocycle(*p.cocycle));
  CHECK(print_presentation(parse_presentation(print_presentation(p), "ga2")) == print_presentation(p));
}

TEST_CASE("non-rigid group and rigidification round trip") {
  Field f = Field::prime(3);
  std::string text = R"(BASE
Fp 3
I rank 1
GENERATORS
x
RELATIONS
x^3 - eps1*x
COMUL
x = x_1 + x_2
COUNIT
x = 0
ANTIPODE
x = -x
)";
  Presentation p = parse_presentation(text, "kernel");
  CHECK(p.group.irank() == 1);
  CHECK_FALSE(p.group.algebra().rigid_relations());
  CHECK(verify_hopf(p.group).all());
  CHECK(same_group(parse_presentation(print_group(p.group), "kernel").group, p.group));

  std::string rig = R"(BASE
Fp 3
I rank 1
GENERATORS
x
COMUL
x = x_1 + x_2 + eps1*(x_1*x_2)
COUNIT
x = 0
ANTIPODE
x = -x + eps1*(x^2)
RIGIDIFICATION
x = x + eps1*(x^2)
)";
  Presentation q = parse_presentation(rig, "g");
  REQUIRE(q.rigidification);
  CHECK(q.rigidification->at(0).part(1) == Poly::parse("x^2", {"x"}, f));
  CHECK(print_presentation(parse_presentation(print_presentation(q), "g")) == print_presentation(q));
  CHECK_THROWS_AS(parse_presentation(std::string(kGa) + "RIGIDIFICATION\nx = x\n", "g"), Error);
}
