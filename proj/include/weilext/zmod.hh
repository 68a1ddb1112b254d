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
#include <optional>
#include <string>
#include <vector>

namespace wx {

using ZVec = std::vector<std::int64_t>;

// Z/p^N with p^N < 2^31, so a product of two residues fits in int64.
class ZModRing {
 public:
  ZModRing(unsigned p, unsigned precision);

  unsigned prime() const { return p_; }
  unsigned precision() const { return n_; }
  std::int64_t modulus() const { return q_; }
  std::int64_t reduce(std::int64_t v) const;
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return reduce(a * b); }
  std::int64_t power_of_p(unsigned e) const;  // p^e, 0 once e >= N
  unsigned valuation(std::int64_t v) const;   // N for 0
  std::int64_t unit_inverse(std::int64_t u) const;
  bool operator==(const ZModRing& o) const { return p_ == o.p_ && n_ == o.n_; }

 private:
  unsigned p_, n_;
  std::int64_t q_;
};

// Dense matrix over Z/p^N, row major.
class ZMatrix {
 public:
  ZMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static ZMatrix identity(std::size_t n);
  static ZMatrix from_rows(const std::vector<ZVec>& rows, std::size_t cols);
  static ZMatrix from_columns(const std::vector<ZVec>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  ZVec row(std::size_t i) const;
  ZVec column(std::size_t j) const;
  ZVec apply(const ZModRing& r, const ZVec& x) const;
  ZMatrix multiply(const ZModRing& r, const ZMatrix& o) const;

 private:
  std::size_t rows_, cols_;
  std::vector<std::int64_t> data_;
};

// U A V = diag(p^{v_0}, p^{v_1}, ...), U and V invertible. valuations has
// min(rows, cols) entries, nondecreasing, N marking a zero diagonal entry.
struct SmithForm {
  ZMatrix U, V;
  std::vector<unsigned> valuations;
};

SmithForm smith(const ZModRing& r, ZMatrix a);
std::optional<ZVec> solve(const ZModRing& r, const ZMatrix& a, const ZVec& b);
// Generators of {x : a x = 0}.
std::vector<ZVec> kernel(const ZModRing& r, const ZMatrix& a);

// (Z/p^N)^n modulo the span of the relation rows. Lengths count composition
// factors, so the order of the module is p^length.
class FiniteModule {
 public:
  FiniteModule(ZModRing ring, std::size_t ngens, std::vector<ZVec> relations = {});

  const ZModRing& ring() const { return ring_; }
  std::size_t ngens() const { return n_; }
  const std::vector<ZVec>& relations() const { return rels_; }
  unsigned length() const { return length_; }
  // Exponents e of the cyclic factors Z/p^e, nondecreasing, zeros omitted.
  std::vector<unsigned> invariants() const;
  bool is_zero_element(const ZVec& v) const;
  // Length of the submodule generated by the given elements.
  unsigned span_length(const std::vector<ZVec>& elems) const;
  // Length of the quotient by the submodule generated by the elements.
  unsigned quotient_length(const std::vector<ZVec>& elems) const { return length_ - span_length(elems); }
  ZVec unit(std::size_t i) const;
  std::string to_string() const;  // e.g. "Z/4 + Z/2"

 private:
  ZModRing ring_;
  std::size_t n_;
  std::vector<ZVec> rels_;
  unsigned length_;
};

// A homomorphism given by the images of the source generators, stored as
// the columns of a target-by-source matrix.
struct ModuleMap {
  FiniteModule source, target;
  ZMatrix matrix;

  ZVec apply(const ZVec& x) const;
  bool well_defined() const;  // relations land in relations
  unsigned image_length() const;
  unsigned kernel_length() const { return source.length() - image_length(); }
  bool injective() const { return kernel_length() == 0; }
  bool surjective() const { return image_length() == target.length(); }
  bool is_zero() const;
};

ModuleMap compose(const ModuleMap& second, const ModuleMap& first);

}  // namespace wx
