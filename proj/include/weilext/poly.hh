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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "weilext/coeff.hh"

namespace wx {

using Mono = std::vector<std::uint32_t>;

// Graded reverse lexicographic order, variable 0 largest.
// Returns >0 when a > b, <0 when a < b, 0 when equal.
int grevlex_cmp(const Mono& a, const Mono& b);
unsigned mono_degree(const Mono& m);
bool mono_divides(const Mono& a, const Mono& b);
Mono mono_mul(const Mono& a, const Mono& b);
Mono mono_div(const Mono& a, const Mono& b);  // requires mono_divides(b, a)
Mono mono_lcm(const Mono& a, const Mono& b);

struct MonoHash {
  std::size_t operator()(const Mono& m) const noexcept;
};

struct Term {
  Mono mono;
  Coeff coeff;
};

// Polynomial in a fixed number of variables. Terms are kept sorted by
// decreasing grevlex order with no zero coefficients.
class Poly {
 public:
  Poly(Field f, std::size_t nvars) : field_(f), nvars_(nvars) {}
  static Poly constant(Field f, std::size_t nvars, const Coeff& c);
  static Poly constant(Field f, std::size_t nvars, long c) { return constant(f, nvars, Coeff::from_int(f, c)); }
  static Poly variable(Field f, std::size_t nvars, std::size_t i);
  static Poly monomial(Field f, Mono m, const Coeff& c);
  static Poly from_terms(Field f, std::size_t nvars, std::vector<Term> terms);

  Field field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Coeff constant_term() const;
  Coeff coefficient(const Mono& m) const;
  const Term& lead() const { return terms_.front(); }
  unsigned total_degree() const;
  unsigned degree_in(std::size_t var) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Coeff& c) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly pow(unsigned e) const;
  Poly mul_term(const Mono& m, const Coeff& c) const;
  Poly monic() const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly derivative(std::size_t var) const;
  Coeff evaluate(std::span<const Coeff> point) const;
  // Variable i becomes variable map[i] of a ring with new_nvars variables.
  Poly remap(std::span<const std::size_t> map, std::size_t new_nvars) const;
  // Variables shifted by offset into a ring with new_nvars variables.
  Poly shift(std::size_t offset, std::size_t new_nvars) const;
  // Reinterpret integer-valued rational coefficients modulo p, or lift
  // residues to the rationals.
  Poly change_field(Field target) const;

  // Substitute images[i] (all in one ring) for variable i.
  Poly compose(std::span<const Poly> images) const;

  std::string to_string(const std::vector<std::string>& names) const;
  static Poly parse(std::string_view text, const std::vector<std::string>& names, Field f);

 private:
  void canonicalize_();
  Field field_;
  std::size_t nvars_;
  std::vector<Term> terms_;
};

}  // namespace wx
