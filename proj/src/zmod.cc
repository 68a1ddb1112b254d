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

#include "weilext/zmod.hh"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

#include "weilext/coeff.hh"

namespace wx {

ZModRing::ZModRing(unsigned p, unsigned precision) : p_(p), n_(precision), q_(1) {
  if (!is_prime(p)) throw Error(Error::Kind::domain, "p-adic precision needs a prime, got " + std::to_string(p));
  if (precision == 0) throw Error(Error::Kind::domain, "p-adic precision must be positive");
  for (unsigned i = 0; i < precision; ++i) {
    q_ *= p;
    if (q_ >= (std::int64_t{1} << 31))
      throw Error(Error::Kind::bounds, "p^N = " + std::to_string(p) + "^" + std::to_string(precision) +
                                           " exceeds 2^31");
  }
}

std::int64_t ZModRing::reduce(std::int64_t v) const {
  v %= q_;
  return v < 0 ? v + q_ : v;
}

std::int64_t ZModRing::power_of_p(unsigned e) const {
  if (e >= n_) return 0;
  std::int64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r *= p_;
  return r;
}

unsigned ZModRing::valuation(std::int64_t v) const {
  v = reduce(v);
  if (v == 0) return n_;
  unsigned e = 0;
  while (v % p_ == 0) v /= p_, ++e;
  return e;
}

std::int64_t ZModRing::unit_inverse(std::int64_t u) const {
  // Extended Euclid on (u, q).
  std::int64_t a = reduce(u), b = q_, x0 = 1, x1 = 0;
  while (b != 0) {
    std::int64_t t = a / b;
    std::swap(a, b), b -= t * a;
    std::swap(x0, x1), x1 -= t * x0;
  }
  if (a != 1) throw std::logic_error("unit_inverse of a non-unit");
  return reduce(x0);
}

ZMatrix ZMatrix::identity(std::size_t n) {
  ZMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ZMatrix ZMatrix::from_rows(const std::vector<ZVec>& rows, std::size_t cols) {
  ZMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i].at(j);
  return m;
}

ZMatrix ZMatrix::from_columns(const std::vector<ZVec>& cols, std::size_t rows) {
  ZMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j].at(i);
  return m;
}

ZVec ZMatrix::row(std::size_t i) const { return ZVec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

ZVec ZMatrix::column(std::size_t j) const {
  ZVec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

ZVec ZMatrix::apply(const ZModRing& r, const ZVec& x) const {
  ZVec y(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc = r.reduce(acc + r.mul(at(i, j), x.at(j)));
    y[i] = acc;
  }
  return y;
}

ZMatrix ZMatrix::multiply(const ZModRing& r, const ZMatrix& o) const {
  ZMatrix m(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      std::int64_t a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) m.at(i, j) = r.reduce(m.at(i, j) + r.mul(a, o.at(k, j)));
    }
  return m;
}

namespace {

void row_axpy(const ZModRing& r, ZMatrix& m, std::size_t dst, std::size_t src, std::int64_t c) {
  if (c == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m.at(dst, j) = r.reduce(m.at(dst, j) + r.mul(c, m.at(src, j)));
}

void col_axpy(const ZModRing& r, ZMatrix& m, std::size_t dst, std::size_t src, std::int64_t c) {
  if (c == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, dst) = r.reduce(m.at(i, dst) + r.mul(c, m.at(i, src)));
}

void swap_rows(ZMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(ZMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

void scale_row(const ZModRing& r, ZMatrix& m, std::size_t i, std::int64_t c) {
  for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = r.mul(m.at(i, j), c);
}

}  // namespace

// Z/p^N is local, so an entry of least valuation divides everything in the
// remaining block and plain elimination reaches the diagonal form.
SmithForm smith(const ZModRing& r, ZMatrix a) {
  const std::size_t m = a.rows(), n = a.cols(), k = std::min(m, n);
  ZMatrix U = ZMatrix::identity(m), V = ZMatrix::identity(n);
  std::vector<unsigned> vals;
  for (std::size_t t = 0; t < k; ++t) {
    unsigned best = r.precision();
    std::size_t bi = t, bj = t;
    for (std::size_t i = t; i < m && best > 0; ++i)
      for (std::size_t j = t; j < n; ++j) {
        unsigned v = r.valuation(a.at(i, j));
        if (v < best) best = v, bi = i, bj = j;
        if (best == 0) break;
      }
    if (best == r.precision()) {
      vals.resize(k, r.precision());
      break;
    }
    swap_rows(a, t, bi), swap_rows(U, t, bi);
    swap_cols(a, t, bj), swap_cols(V, t, bj);
    std::int64_t pv = r.power_of_p(best), unit = a.at(t, t) / pv;
    std::int64_t inv = r.unit_inverse(unit);
    scale_row(r, a, t, inv), scale_row(r, U, t, inv);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == t || a.at(i, t) == 0) continue;
      std::int64_t c = r.reduce(-(a.at(i, t) / pv));
      row_axpy(r, a, i, t, c), row_axpy(r, U, i, t, c);
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (j == t || a.at(t, j) == 0) continue;
      std::int64_t c = r.reduce(-(a.at(t, j) / pv));
      col_axpy(r, a, j, t, c), col_axpy(r, V, j, t, c);
    }
    vals.push_back(best);
  }
  return {std::move(U), std::move(V), std::move(vals)};
}

std::optional<ZVec> solve(const ZModRing& r, const ZMatrix& a, const ZVec& b) {
  SmithForm s = smith(r, a);
  ZVec ub = s.U.apply(r, b), y(a.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    unsigned v = i < s.valuations.size() ? s.valuations[i] : r.precision();
    if (v == r.precision()) {
      if (ub[i] != 0) return std::nullopt;
      continue;
    }
    if (r.valuation(ub[i]) < v) return std::nullopt;
    y[i] = ub[i] / r.power_of_p(v);
  }
  return s.V.apply(r, y);
}

std::vector<ZVec> kernel(const ZModRing& r, const ZMatrix& a) {
  SmithForm s = smith(r, a);
  std::vector<ZVec> gens;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    unsigned v = j < s.valuations.size() ? s.valuations[j] : r.precision();
    if (v == 0) continue;
    std::int64_t scale = v == r.precision() ? 1 : r.power_of_p(r.precision() - v);
    ZVec g = s.V.column(j);
    for (auto& x : g) x = r.mul(x, scale);
    gens.push_back(std::move(g));
  }
  return gens;
}

namespace {

unsigned cokernel_length(const ZModRing& r, const std::vector<ZVec>& rows, std::size_t n) {
  if (n == 0) return 0;
  if (rows.empty()) return static_cast<unsigned>(n) * r.precision();
  SmithForm s = smith(r, ZMatrix::from_rows(rows, n));
  unsigned len = 0;
  for (unsigned v : s.valuations) len += v;
  if (s.valuations.size() < n) len += static_cast<unsigned>(n - s.valuations.size()) * r.precision();
  return len;
}

}  // namespace

FiniteModule::FiniteModule(ZModRing ring, std::size_t ngens, std::vector<ZVec> relations)
    : ring_(ring), n_(ngens), rels_(std::move(relations)) {
  for (auto& v : rels_) {
    if (v.size() != n_) throw std::logic_error("relation of the wrong width");
    for (auto& x : v) x = ring_.reduce(x);
  }
  length_ = cokernel_length(ring_, rels_, n_);
}

std::vector<unsigned> FiniteModule::invariants() const {
  std::vector<unsigned> out;
  if (n_ == 0) return out;
  std::vector<unsigned> vals(n_, ring_.precision());
  if (!rels_.empty()) {
    SmithForm s = smith(ring_, ZMatrix::from_rows(rels_, n_));
    std::copy(s.valuations.begin(), s.valuations.end(), vals.begin());
  }
  for (unsigned v : vals)
    if (v > 0) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

bool FiniteModule::is_zero_element(const ZVec& v) const { return span_length({v}) == 0; }

unsigned FiniteModule::span_length(const std::vector<ZVec>& elems) const {
  if (elems.empty()) return 0;
  std::vector<ZVec> rows = rels_;
  rows.insert(rows.end(), elems.begin(), elems.end());
  return length_ - cokernel_length(ring_, rows, n_);
}

ZVec FiniteModule::unit(std::size_t i) const {
  ZVec v(n_, 0);
  v.at(i) = 1;
  return v;
}

std::string FiniteModule::to_string() const {
  std::string s;
  for (unsigned e : invariants()) {
    if (!s.empty()) s += " + ";
    std::int64_t order = 1;
    for (unsigned i = 0; i < e; ++i) order *= ring_.prime();
    s += "Z/" + std::to_string(order);
  }
  return s.empty() ? "0" : s;
}

ZVec ModuleMap::apply(const ZVec& x) const { return matrix.apply(source.ring(), x); }

bool ModuleMap::well_defined() const {
  for (auto& rel : source.relations())
    if (!target.is_zero_element(apply(rel))) return false;
  return true;
}

unsigned ModuleMap::image_length() const {
  std::vector<ZVec> cols;
  for (std::size_t j = 0; j < matrix.cols(); ++j) cols.push_back(matrix.column(j));
  return target.span_length(cols);
}

bool ModuleMap::is_zero() const { return image_length() == 0; }

ModuleMap compose(const ModuleMap& second, const ModuleMap& first) {
  if (first.target.ngens() != second.source.ngens()) throw std::logic_error("compose: shape mismatch");
  return {first.source, second.target, second.matrix.multiply(first.source.ring(), first.matrix)};
}

}  // namespace wx
