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

#include "weilext/groebner.hh"

#include <algorithm>
#include <utility>

namespace wx {

Division divide(const Poly& f, const std::vector<Poly>& divisors) {
  Division d{{}, Poly(f.field(), f.nvars())};
  d.quotients.assign(divisors.size(), Poly(f.field(), f.nvars()));
  std::vector<std::vector<Term>> qt(divisors.size());
  std::vector<Term> rem;
  Poly p = f;
  while (!p.is_zero()) {
    const Term lt = p.lead();
    bool divided = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const Term& g = divisors[i].lead();
      if (!mono_divides(g.mono, lt.mono)) continue;
      Mono m = mono_div(lt.mono, g.mono);
      Coeff c = lt.coeff / g.coeff;
      p -= divisors[i].mul_term(m, c);
      qt[i].push_back({std::move(m), c});
      divided = true;
      break;
    }
    if (!divided) {
      rem.push_back(lt);
      p -= Poly::monomial(f.field(), lt.mono, lt.coeff);
    }
  }
  for (std::size_t i = 0; i < divisors.size(); ++i)
    d.quotients[i] = Poly::from_terms(f.field(), f.nvars(), std::move(qt[i]));
  d.remainder = Poly::from_terms(f.field(), f.nvars(), std::move(rem));
  return d;
}

Poly reduce(const Poly& f, const std::vector<Poly>& divisors) {
  if (divisors.empty()) return f;
  std::vector<Term> rem;
  Poly p = f;
  while (!p.is_zero()) {
    const Term& lt = p.lead();
    const Poly* hit = nullptr;
    for (auto& g : divisors)
      if (mono_divides(g.lead().mono, lt.mono)) {
        hit = &g;
        break;
      }
    if (hit) {
      p -= hit->mul_term(mono_div(lt.mono, hit->lead().mono), lt.coeff / hit->lead().coeff);
    } else {
      rem.push_back(lt);
      p -= Poly::monomial(f.field(), lt.mono, lt.coeff);
    }
  }
  return Poly::from_terms(f.field(), f.nvars(), std::move(rem));
}

namespace {

Poly spoly(const Poly& f, const Poly& g) {
  Mono l = mono_lcm(f.lead().mono, g.lead().mono);
  return f.mul_term(mono_div(l, f.lead().mono), f.lead().coeff.inverse()) -
         g.mul_term(mono_div(l, g.lead().mono), g.lead().coeff.inverse());
}

bool coprime(const Mono& a, const Mono& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

}  // namespace

std::vector<Poly> buchberger(const std::vector<Poly>& generators) {
  std::vector<Poly> g;
  for (auto& f : generators)
    if (!f.is_zero()) g.push_back(f.monic());
  if (g.empty()) return g;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    // Normal selection: smallest lcm first.
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](auto& a, auto& b) {
      return grevlex_cmp(mono_lcm(g[a.first].lead().mono, g[a.second].lead().mono),
                         mono_lcm(g[b.first].lead().mono, g[b.second].lead().mono)) < 0;
    });
    auto [i, j] = *best;
    pairs.erase(best);
    if (coprime(g[i].lead().mono, g[j].lead().mono)) continue;
    Poly r = reduce(spoly(g[i], g[j]), g);
    if (r.is_zero()) continue;
    g.push_back(r.monic());
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
  }
  // Minimalize then autoreduce.
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      if (mono_divides(g[j].lead().mono, g[i].lead().mono) &&
          (g[j].lead().mono != g[i].lead().mono || j < i))
        redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<Poly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced.push_back(reduce(minimal[i], others).monic());
  }
  std::sort(reduced.begin(), reduced.end(),
            [](const Poly& a, const Poly& b) { return grevlex_cmp(a.lead().mono, b.lead().mono) > 0; });
  return reduced;
}

bool is_groebner(const std::vector<Poly>& basis) {
  for (std::size_t j = 1; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      if (coprime(basis[i].lead().mono, basis[j].lead().mono)) continue;
      if (!reduce(spoly(basis[i], basis[j]), basis).is_zero()) return false;
    }
  return true;
}

}  // namespace wx
