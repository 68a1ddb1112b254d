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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weilext/extensions.hh"

namespace wx {

// Text form of a group and optional extension data:
//
//   BASE            "Fp <p>" or "Q", then optionally "I rank <r>"
//   GENERATORS      identifiers separated by spaces or commas
//   RELATIONS       one polynomial per line, "lhs = rhs" allowed
//   COMUL           "<gen> = <image>" over the suffixed names g_1, g_2
//   COUNIT          "<gen> = <constant>"
//   ANTIPODE        "<gen> = <image>"
//   COCYCLE         "<gen> = <value>" in I (x) A (x) A, optional
//   RIGIDIFICATION  "<gen> = <image>" in A[I], optional
//
// Elements of k[I] are written with the symbols eps1..epsr; products of two
// of them vanish. '#' starts a comment. Without COCYCLE, "I rank r" makes
// the group one over k[I]; with COCYCLE the group is over k and r is the
// rank of I for the cocycle.
struct Presentation {
  HopfAlgebra group;
  std::optional<Cocycle2> cocycle;
  std::optional<std::vector<DualElement>> rigidification;
};

// Error::parse on malformed text, unknown sections or unknown generators;
// Error::domain when the values given under COCYCLE are not a derivation.
Presentation parse_presentation(std::string_view text, std::string name);
// The group is named after the file stem.
Presentation load_presentation(const std::filesystem::path& path);
// Canonical text; parse_presentation inverts it on normal forms.
std::string print_presentation(const Presentation& p);
std::string print_group(const HopfAlgebra& G);

}  // namespace wx
