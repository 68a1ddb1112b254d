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

#include <string>
#include <vector>

#include "weilext/hopf.hh"

namespace wx {

// Builds a group over k from text. Comultiplication images use the
// generator names suffixed _1 and _2 for the two tensor factors.
HopfAlgebra hopf_from_text(std::string name, Field f, const std::vector<std::string>& gens,
                           const std::vector<std::string>& relations, NfStrategy strategy,
                           const std::vector<std::string>& comul, const std::vector<std::string>& counit,
                           const std::vector<std::string>& antipode);

namespace catalog {

HopfAlgebra additive(Field f);                     // x
HopfAlgebra multiplicative(Field f);               // t, s with ts = 1
HopfAlgebra roots_of_unity(Field f, unsigned n);   // x with x^n = 1
HopfAlgebra alpha_p(Field f);                      // t with t^p = 0
HopfAlgebra witt(Field f, unsigned n);             // x0..x{n-1}, over F_p only
HopfAlgebra vector_group(Field f, std::size_t dim, const std::string& prefix = "x");
HopfAlgebra additive_by_multiplicative(Field f);   // a, t, s: (a,t)(a',t') = (a + t a', t t')
HopfAlgebra unipotent3(Field f);                   // a, b, c: upper unitriangular 3x3
HopfAlgebra constant_cyclic(Field f, unsigned n);  // d1..d{n-1}: indicator functions

// Looks up "ga", "gm", "mu<n>", "alpha_p", "w<n>", "ga2", "ga_gm", "u3", "z<n>".
HopfAlgebra by_name(const std::string& name, Field f);
std::vector<std::string> names();

}  // namespace catalog
}  // namespace wx
