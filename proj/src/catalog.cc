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

#include "weilext/catalog.hh"

#include "weilext/witt.hh"

namespace wx {

HopfAlgebra hopf_from_text(std::string name, Field f, const std::vector<std::string>& gens,
                           const std::vector<std::string>& relations, NfStrategy strategy,
                           const std::vector<std::string>& comul, const std::vector<std::string>& counit,
                           const std::vector<std::string>& antipode) {
  std::vector<Poly> rels;
  for (auto& r : relations) rels.push_back(Poly::parse(r, gens, f));
  if (rels.empty()) strategy = NfStrategy::free_ring;
  PresentedAlgebra A(f, gens, rels, strategy);
  const auto sq = A.tensor_power(2).gens();
  const NilShape k = NilShape::dual(0);
  std::vector<DualElement> c, e, s;
  for (auto& t : comul) c.emplace_back(k, Poly::parse(t, sq, f));
  for (auto& t : counit) e.emplace_back(k, Poly::parse(t, {}, f));
  for (auto& t : antipode) s.emplace_back(k, Poly::parse(t, gens, f));
  return HopfAlgebra(std::move(name), std::move(A), std::move(c), std::move(e), std::move(s));
}

namespace catalog {

HopfAlgebra additive(Field f) {
  return hopf_from_text("ga", f, {"x"}, {}, NfStrategy::free_ring, {"x_1 + x_2"}, {"0"}, {"-x"}).with_smooth(true);
}

HopfAlgebra multiplicative(Field f) {
  return hopf_from_text("gm", f, {"t", "s"}, {"t*s - 1"}, NfStrategy::rewrite, {"t_1*t_2", "s_1*s_2"}, {"1", "1"},
                        {"s", "t"})
      .with_smooth(true);
}

HopfAlgebra roots_of_unity(Field f, unsigned n) {
  if (n == 0) throw Error(Error::Kind::domain, "mu_n needs n >= 1");
  auto G = hopf_from_text("mu" + std::to_string(n), f, {"x"}, {"x^" + std::to_string(n) + " - 1"},
                          NfStrategy::rewrite, {"x_1*x_2"}, {"1"}, {"x^" + std::to_string(n - 1)});
  unsigned p = f.characteristic();
  // Etale exactly when n is invertible in k; otherwise no marker.
  return (p == 0 || n % p != 0) ? G.with_smooth(true) : G;
}

HopfAlgebra alpha_p(Field f) {
  if (f.is_rational()) throw Error(Error::Kind::domain, "alpha_p needs positive characteristic");
  return hopf_from_text("alpha_p", f, {"t"}, {"t^" + std::to_string(f.characteristic())}, NfStrategy::rewrite,
                        {"t_1 + t_2"}, {"0"}, {"-t"});
}

HopfAlgebra witt(Field f, unsigned n) {
  if (f.is_rational()) throw Error(Error::Kind::domain, "Witt groups are modelled over F_p only");
  const unsigned p = f.characteristic();
  WittPolynomials w = WittPolynomials::over_rationals(p, n).reduced(f);
  std::vector<std::string> gens;
  for (unsigned i = 0; i < n; ++i) gens.push_back("x" + std::to_string(i));
  PresentedAlgebra A = PresentedAlgebra::free(f, gens);
  const NilShape k = NilShape::dual(0);
  std::vector<DualElement> c, e, s;
  for (unsigned i = 0; i < n; ++i) {
    c.emplace_back(k, w.sum[i]);
    e.emplace_back(k, Poly(f, 0));
    s.emplace_back(k, w.negation[i]);
  }
  return HopfAlgebra("w" + std::to_string(n), std::move(A), std::move(c), std::move(e), std::move(s)).with_smooth(true);
}

HopfAlgebra vector_group(Field f, std::size_t dim, const std::string& prefix) {
  std::vector<std::string> gens, c, e, s;
  for (std::size_t i = 0; i < dim; ++i) {
    std::string g = prefix + std::to_string(i + 1);
    gens.push_back(g);
    c.push_back(g + "_1 + " + g + "_2");
    e.push_back("0");
    s.push_back("-" + g);
  }
  return hopf_from_text("ga^" + std::to_string(dim), f, gens, {}, NfStrategy::free_ring, c, e, s).with_smooth(true);
}

HopfAlgebra additive_by_multiplicative(Field f) {
  return hopf_from_text("ga_gm", f, {"a", "t", "s"}, {"t*s - 1"}, NfStrategy::rewrite,
                        {"a_1 + t_1*a_2", "t_1*t_2", "s_1*s_2"}, {"0", "1", "1"}, {"-s*a", "s", "t"})
      .with_smooth(true);
}

HopfAlgebra unipotent3(Field f) {
  return hopf_from_text("u3", f, {"a", "b", "c"}, {}, NfStrategy::free_ring, {"a_1 + a_2", "b_1 + b_2", "c_1 + c_2 + a_1*b_2"},
                        {"0", "0", "0"}, {"-a", "-b", "a*b - c"})
      .with_smooth(true);
}

HopfAlgebra constant_cyclic(Field f, unsigned n) {
  if (n < 2) throw Error(Error::Kind::domain, "constant cyclic group needs n >= 2");
  std::vector<std::string> gens, rels, c, e, s;
  for (unsigned i = 1; i < n; ++i) gens.push_back("d" + std::to_string(i));
  auto delta = [&](unsigned i, const std::string& suffix) {
    if (i != 0) return "d" + std::to_string(i) + suffix;
    std::string z = "(1";
    for (auto& g : gens) z += " - " + g + suffix;
    return z + ")";
  };
  for (unsigned i = 1; i < n; ++i)
    for (unsigned j = i; j < n; ++j)
      rels.push_back("d" + std::to_string(i) + "*d" + std::to_string(j) + (i == j ? " - d" + std::to_string(i) : ""));
  for (unsigned g = 1; g < n; ++g) {
    std::string t;
    for (unsigned h = 0; h < n; ++h) {
      if (!t.empty()) t += " + ";
      t += delta(h, "_1") + "*" + delta((g + n - h) % n, "_2");
    }
    c.push_back(t);
    e.push_back("0");
    s.push_back(delta(n - g, ""));
  }
  return hopf_from_text("z" + std::to_string(n), f, gens, rels, NfStrategy::groebner, c, e, s).with_smooth(true);
}

HopfAlgebra by_name(const std::string& name, Field f) {
  auto suffix_number = [&](std::size_t prefix) -> unsigned {
    std::string rest = name.substr(prefix);
    if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos || rest.size() > 4)
      throw Error(Error::Kind::config, "unknown catalog group '" + name + "'");
    return static_cast<unsigned>(std::stoul(rest));
  };
  if (name == "ga") return additive(f);
  if (name == "gm") return multiplicative(f);
  if (name == "alpha_p") return alpha_p(f);
  if (name == "ga2") return vector_group(f, 2).renamed("ga2");
  if (name == "ga_gm") return additive_by_multiplicative(f);
  if (name == "u3") return unipotent3(f);
  if (name.rfind("mu", 0) == 0) return roots_of_unity(f, suffix_number(2));
  if (name.rfind("w", 0) == 0) return witt(f, suffix_number(1));
  if (name.rfind("z", 0) == 0) return constant_cyclic(f, suffix_number(1));
  throw Error(Error::Kind::config, "unknown catalog group '" + name + "'");
}

std::vector<std::string> names() { return {"ga", "gm", "mu<n>", "alpha_p", "w<n>", "ga2", "ga_gm", "u3", "z<n>"}; }

}  // namespace catalog
}  // namespace wx
