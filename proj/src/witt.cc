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

#include "weilext/witt.hh"

namespace wx {

namespace {

mpz_class ipow(unsigned base, unsigned e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

// Solve for Witt components whose ghost vector equals targets.
std::vector<Poly> from_ghost(unsigned p, const std::vector<Poly>& targets) {
  const Field q = Field::rationals();
  std::vector<Poly> out;
  for (unsigned k = 0; k < targets.size(); ++k) {
    Poly rest = targets[k];
    for (unsigned i = 0; i < k; ++i) {
      unsigned e = 1;
      for (unsigned j = i; j < k; ++j) e *= p;
      rest -= out[i].pow(e) * Coeff::from_mpz(q, ipow(p, i));
    }
    out.push_back(rest * Coeff::from_mpq(q, mpq_class(1, ipow(p, k))));
  }
  return out;
}

}  // namespace

Poly ghost_component(unsigned p, unsigned k, std::size_t offset, std::size_t nvars) {
  const Field q = Field::rationals();
  Poly w(q, nvars);
  for (unsigned i = 0; i <= k; ++i) {
    unsigned e = 1;
    for (unsigned j = i; j < k; ++j) e *= p;
    w += Poly::variable(q, nvars, offset + i).pow(e) * Coeff::from_mpz(q, ipow(p, i));
  }
  return w;
}

WittPolynomials WittPolynomials::over_rationals(unsigned p, unsigned n) {
  if (!is_prime(p) || n == 0) throw Error(Error::Kind::domain, "Witt polynomials need a prime and a positive length");
  WittPolynomials w;
  w.p = p;
  w.n = n;
  std::vector<Poly> gsum, gprod, gneg;
  for (unsigned k = 0; k < n; ++k) {
    Poly gx = ghost_component(p, k, 0, 2 * n), gy = ghost_component(p, k, n, 2 * n);
    gsum.push_back(gx + gy);
    gprod.push_back(gx * gy);
    gneg.push_back(-ghost_component(p, k, 0, n));
  }
  w.sum = from_ghost(p, gsum);
  w.product = from_ghost(p, gprod);
  w.negation = from_ghost(p, gneg);
  return w;
}

WittPolynomials WittPolynomials::reduced(Field field) const {
  WittPolynomials r = *this;
  for (auto* v : {&r.sum, &r.product, &r.negation})
    for (auto& f : *v) f = f.change_field(field);
  return r;
}

WittVector::WittVector(unsigned p, std::vector<Poly> components) : p_(p), comps_(std::move(components)) {
  if (comps_.empty()) throw Error(Error::Kind::domain, "Witt vector of length zero");
  for (auto& c : comps_)
    if (c.field() != comps_[0].field() || c.nvars() != comps_[0].nvars())
      throw Error(Error::Kind::domain, "Witt components in different rings");
}

namespace {

std::vector<Poly> concat(const std::vector<Poly>& a, const std::vector<Poly>& b) {
  std::vector<Poly> r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

void check_lengths(const WittVector& a, const WittVector& b, const WittPolynomials& w) {
  if (a.length() != b.length() || a.length() != w.n || a.prime() != w.p || b.prime() != w.p)
    throw Error(Error::Kind::domain, "Witt vector length mismatch");
}

}  // namespace

WittVector WittVector::add(const WittVector& o, const WittPolynomials& w) const {
  check_lengths(*this, o, w);
  auto args = concat(comps_, o.comps_);
  std::vector<Poly> r;
  for (auto& s : w.sum) r.push_back(s.compose(args));
  return WittVector(p_, r);
}

WittVector WittVector::mul(const WittVector& o, const WittPolynomials& w) const {
  check_lengths(*this, o, w);
  auto args = concat(comps_, o.comps_);
  std::vector<Poly> r;
  for (auto& s : w.product) r.push_back(s.compose(args));
  return WittVector(p_, r);
}

WittVector WittVector::neg(const WittPolynomials& w) const {
  check_lengths(*this, *this, w);
  std::vector<Poly> r;
  for (auto& s : w.negation) r.push_back(s.compose(comps_));
  return WittVector(p_, r);
}

WittVector WittVector::frobenius() const {
  if (comps_[0].field().characteristic() != p_)
    throw Error(Error::Kind::domain, "Frobenius as p-th powers needs an F_p-algebra");
  std::vector<Poly> r;
  for (auto& c : comps_) r.push_back(c.pow(p_));
  return WittVector(p_, r);
}

WittVector WittVector::verschiebung() const {
  std::vector<Poly> r{Poly(comps_[0].field(), comps_[0].nvars())};
  for (std::size_t i = 0; i + 1 < comps_.size(); ++i) r.push_back(comps_[i]);
  return WittVector(p_, r);
}

std::vector<mpz_class> ghost_values(unsigned p, const std::vector<mpz_class>& a) {
  std::vector<mpz_class> g;
  for (unsigned k = 0; k < a.size(); ++k) {
    mpz_class s = 0;
    for (unsigned i = 0; i <= k; ++i) {
      unsigned long e = 1;
      for (unsigned j = i; j < k; ++j) e *= p;
      mpz_class t;
      mpz_pow_ui(t.get_mpz_t(), a[i].get_mpz_t(), e);
      s += ipow(p, i) * t;
    }
    g.push_back(s);
  }
  return g;
}

}  // namespace wx
