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

#include "weilext/coeff.hh"

namespace wx {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p > (1ull << 31) || !is_prime(p))
    throw Error(Error::Kind::config, "characteristic must be a prime <= 2^31, got " + std::to_string(p));
  return Field(static_cast<std::uint32_t>(p));
}

std::string Field::to_string() const { return p_ == 0 ? "Q" : "Fp " + std::to_string(p_); }

namespace {

std::uint32_t reduce(long v, std::uint32_t p) {
  long r = v % static_cast<long>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

std::uint32_t reduce_mpz(const mpz_class& v, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  if (a == 0) throw Error(Error::Kind::domain, "division by zero");
  long t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    long q = r / nr;
    long tmp = t - q * nt; t = nt; nt = tmp;
    tmp = r - q * nr; r = nr; nr = tmp;
  }
  return reduce(t, p);
}

}  // namespace

Coeff Coeff::zero(Field f) { return from_int(f, 0); }

Coeff Coeff::from_int(Field f, long v) {
  Coeff c;
  if (f.is_rational())
    c.v_ = mpq_class(v);
  else
    c.v_ = FpElt{reduce(v, f.characteristic()), f.characteristic()};
  return c;
}

Coeff Coeff::from_mpz(Field f, const mpz_class& v) {
  Coeff c;
  if (f.is_rational())
    c.v_ = mpq_class(v);
  else
    c.v_ = FpElt{reduce_mpz(v, f.characteristic()), f.characteristic()};
  return c;
}

Coeff Coeff::from_mpq(Field f, const mpq_class& v) {
  Coeff c;
  if (f.is_rational()) {
    mpq_class q = v;
    q.canonicalize();
    c.v_ = q;
    return c;
  }
  std::uint32_t p = f.characteristic();
  std::uint32_t den = reduce_mpz(v.get_den(), p);
  if (den == 0) throw Error(Error::Kind::domain, "denominator divisible by the characteristic");
  std::uint64_t num = reduce_mpz(v.get_num(), p);
  c.v_ = FpElt{static_cast<std::uint32_t>(num * inv_mod(den, p) % p), p};
  return c;
}

Field Coeff::field() const {
  if (auto* e = std::get_if<FpElt>(&v_)) return Field(e->p);
  return Field::rationals();
}

bool Coeff::is_zero() const {
  if (auto* e = std::get_if<FpElt>(&v_)) return e->v == 0;
  return std::get<mpq_class>(v_) == 0;
}

bool Coeff::is_one() const {
  if (auto* e = std::get_if<FpElt>(&v_)) return e->v == 1;
  return std::get<mpq_class>(v_) == 1;
}

#define WX_SAME_FIELD(o)                                                  \
  if (v_.index() != (o).v_.index() ||                                     \
      (v_.index() == 0 && std::get<0>(v_).p != std::get<0>((o).v_).p))    \
    throw Error(Error::Kind::domain, "coefficients from different fields");

Coeff Coeff::operator+(const Coeff& o) const {
  WX_SAME_FIELD(o)
  Coeff c;
  if (auto* a = std::get_if<FpElt>(&v_)) {
    std::uint64_t s = std::uint64_t(a->v) + std::get<FpElt>(o.v_).v;
    c.v_ = FpElt{static_cast<std::uint32_t>(s >= a->p ? s - a->p : s), a->p};
  } else {
    c.v_ = mpq_class(std::get<mpq_class>(v_) + std::get<mpq_class>(o.v_));
  }
  return c;
}

Coeff Coeff::operator-(const Coeff& o) const { return *this + (-o); }

Coeff Coeff::operator-() const {
  Coeff c;
  if (auto* a = std::get_if<FpElt>(&v_))
    c.v_ = FpElt{a->v == 0 ? 0 : a->p - a->v, a->p};
  else
    c.v_ = mpq_class(-std::get<mpq_class>(v_));
  return c;
}

Coeff Coeff::operator*(const Coeff& o) const {
  WX_SAME_FIELD(o)
  Coeff c;
  if (auto* a = std::get_if<FpElt>(&v_))
    c.v_ = FpElt{static_cast<std::uint32_t>(std::uint64_t(a->v) * std::get<FpElt>(o.v_).v % a->p), a->p};
  else
    c.v_ = mpq_class(std::get<mpq_class>(v_) * std::get<mpq_class>(o.v_));
  return c;
}

Coeff Coeff::inverse() const {
  Coeff c;
  if (auto* a = std::get_if<FpElt>(&v_)) {
    c.v_ = FpElt{inv_mod(a->v, a->p), a->p};
  } else {
    const auto& q = std::get<mpq_class>(v_);
    if (q == 0) throw Error(Error::Kind::domain, "division by zero");
    c.v_ = mpq_class(1 / q);
  }
  return c;
}

Coeff Coeff::operator/(const Coeff& o) const { return *this * o.inverse(); }

Coeff Coeff::pow(std::uint64_t e) const {
  Coeff r = one(field()), b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

bool Coeff::operator==(const Coeff& o) const {
  if (v_.index() != o.v_.index()) return false;
  if (auto* a = std::get_if<FpElt>(&v_)) {
    const auto& b = std::get<FpElt>(o.v_);
    return a->p == b.p && a->v == b.v;
  }
  return std::get<mpq_class>(v_) == std::get<mpq_class>(o.v_);
}

mpq_class Coeff::to_mpq() const {
  if (auto* a = std::get_if<FpElt>(&v_)) return mpq_class(a->v);
  return std::get<mpq_class>(v_);
}

std::string Coeff::repr() const {
  if (auto* a = std::get_if<FpElt>(&v_)) return std::to_string(a->v);
  return std::get<mpq_class>(v_).get_str();
}

std::string Coeff::to_string() const {
  if (auto* a = std::get_if<FpElt>(&v_)) return std::to_string(a->v) + " mod " + std::to_string(a->p);
  return std::get<mpq_class>(v_).get_str();
}

}  // namespace wx
