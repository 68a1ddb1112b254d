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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace wx {

// Raised on malformed input or on a violated precondition.
class Error : public std::runtime_error {
 public:
  enum class Kind { config, parse, domain, bounds, unsupported };
  Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Coefficient field: prime field F_p (p prime, p <= 2^31) or the rationals.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }
  std::string to_string() const;

  friend bool operator==(Field a, Field b) { return a.p_ == b.p_; }
  friend bool operator!=(Field a, Field b) { return a.p_ != b.p_; }

 private:
  friend class Coeff;
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

// Element of F_p, always reduced.
struct FpElt {
  std::uint32_t v;
  std::uint32_t p;
};

// Field element. Rationals are kept in lowest terms with positive denominator.
class Coeff {
 public:
  static Coeff zero(Field f);
  static Coeff one(Field f) { return from_int(f, 1); }
  static Coeff from_int(Field f, long v);
  static Coeff from_mpz(Field f, const mpz_class& v);
  static Coeff from_mpq(Field f, const mpq_class& v);  // throws on p | denominator

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  Coeff operator+(const Coeff& o) const;
  Coeff operator-(const Coeff& o) const;
  Coeff operator*(const Coeff& o) const;
  Coeff operator/(const Coeff& o) const;
  Coeff operator-() const;
  Coeff& operator+=(const Coeff& o) { return *this = *this + o; }
  Coeff& operator-=(const Coeff& o) { return *this = *this - o; }
  Coeff& operator*=(const Coeff& o) { return *this = *this * o; }
  Coeff inverse() const;
  Coeff pow(std::uint64_t e) const;

  bool operator==(const Coeff& o) const;
  bool operator!=(const Coeff& o) const { return !(*this == o); }

  // Residue in [0,p) for F_p; the rational itself over Q.
  mpq_class to_mpq() const;
  // Bare representative: "3" or "-2/5".
  std::string repr() const;
  // Self-describing form: "3 mod 7" or "-2/5".
  std::string to_string() const;

 private:
  std::variant<FpElt, mpq_class> v_;
};

}  // namespace wx
