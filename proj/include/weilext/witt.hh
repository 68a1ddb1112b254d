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

#include <vector>

#include "weilext/poly.hh"

namespace wx {

// Universal Witt polynomials of length n for the prime p, with integer
// coefficients, computed over Q from the ghost components. Binary
// operations live in 2n variables x_0..x_{n-1}, y_0..y_{n-1}.
struct WittPolynomials {
  unsigned p = 0, n = 0;
  std::vector<Poly> sum, product, negation;  // negation uses n variables

  static WittPolynomials over_rationals(unsigned p, unsigned n);
  // Coefficients reduced into F_p (or kept over Q when field is Q).
  WittPolynomials reduced(Field field) const;
};

// Ghost component w_k = sum_{i<=k} p^i x_i^{p^{k-i}} over Q, variables
// offset..offset+k of a ring with nvars variables.
Poly ghost_component(unsigned p, unsigned k, std::size_t offset, std::size_t nvars);

// A Witt vector with components in a polynomial ring over F_p.
class WittVector {
 public:
  WittVector(unsigned p, std::vector<Poly> components);

  unsigned prime() const { return p_; }
  std::size_t length() const { return comps_.size(); }
  const std::vector<Poly>& components() const { return comps_; }

  WittVector add(const WittVector& o, const WittPolynomials& w) const;
  WittVector mul(const WittVector& o, const WittPolynomials& w) const;
  WittVector neg(const WittPolynomials& w) const;
  // Frobenius on an F_p-algebra raises every component to the p-th power.
  WittVector frobenius() const;
  WittVector verschiebung() const;  // shifts right, dropping the last component
  bool operator==(const WittVector& o) const { return p_ == o.p_ && comps_ == o.comps_; }

 private:
  unsigned p_;
  std::vector<Poly> comps_;
};

// Ghost components of an integer Witt vector (values over Q).
std::vector<mpz_class> ghost_values(unsigned p, const std::vector<mpz_class>& a);

}  // namespace wx
