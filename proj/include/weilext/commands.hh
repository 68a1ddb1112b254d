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
#include <utility>
#include <vector>

namespace wx {

struct CommandOptions {
  unsigned trunc = 4;      // group-algebra truncation for the convolution check in verify
  unsigned witt_len = 2;   // Witt length m for classify
  unsigned fdeg = 3;       // Frobenius window for classify
  unsigned prec = 0;       // coefficient precision p^N; 0 means N = witt_len
  unsigned cohom_deg = 0;  // coboundary search degree; 0 means twice the cocycle degree
};

// Named input text. The name is what the group is called (a file stem).
struct CommandInput {
  std::string name;
  std::string text;
};

// Reads a file; the name is its stem. Error::config when unreadable.
CommandInput read_command_input(const std::string& path);

// Deterministic text plus named boolean checks. passed() is the
// conjunction of the flags.
struct Report {
  std::string text;
  std::vector<std::pair<std::string, bool>> flags;
  bool passed() const;
};

// Hopf axioms, plus the cocycle condition, the rigidification and the
// convolution unit when present or requested.
Report run_verify(const std::string& echo, const CommandInput& input, const CommandOptions& opts);

// Steps: weil-restrict, deform, extract-cocycle, weil-extend, classify,
// scale=<lambda>, baer-sum=<path>. Error::config names the first step whose
// input has the wrong type.
Report run_pipeline(const std::string& echo, const CommandInput& input, const std::vector<std::string>& steps,
                    const CommandOptions& opts);

// Catalog group in presentation form.
std::string catalog_text(const std::string& name, unsigned p);

}  // namespace wx
