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

struct Division {
  std::vector<Poly> quotients;
  Poly remainder;
};

// Multivariate division by an ordered list of divisors. The remainder has no
// term divisible by a leading monomial of the divisors.
Division divide(const Poly& f, const std::vector<Poly>& divisors);
Poly reduce(const Poly& f, const std::vector<Poly>& divisors);

// Reduced Groebner basis under grevlex; monic, sorted by decreasing leading
// monomial. The empty list is returned for the zero ideal.
std::vector<Poly> buchberger(const std::vector<Poly>& generators);

// True when every S-polynomial of the list reduces to zero.
bool is_groebner(const std::vector<Poly>& basis);

}  // namespace wx
