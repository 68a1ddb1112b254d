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

#include <optional>
#include <vector>

#include "weilext/coeff.hh"

namespace wx {

// Dense matrix over a coefficient field, row major.
class Matrix {
 public:
  Matrix(Field f, std::size_t rows, std::size_t cols);
  static Matrix identity(Field f, std::size_t n);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Coeff& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Coeff& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void append_row(const std::vector<Coeff>& row);

  Matrix operator*(const Matrix& o) const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool is_zero() const;

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Coeff> data_;
};

struct EchelonForm {
  Matrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

EchelonForm row_reduce(Matrix m);
std::size_t rank(const Matrix& m);
// Basis of the right kernel. Each vector has a 1 in its own free column and
// 0 in the other free columns.
std::vector<std::vector<Coeff>> kernel(const Matrix& m);
// Some x with m x = b, or nothing when inconsistent.
std::optional<std::vector<Coeff>> solve(const Matrix& m, const std::vector<Coeff>& b);
Coeff determinant(Matrix m);

}  // namespace wx
