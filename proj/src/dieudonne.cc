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

#include "weilext/dieudonne.hh"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>
#include <utility>

#include "weilext/witt.hh"

namespace wx {

// ---- D = Z/p^N[F, V]/(FV - p) ----

DieudonneElt DieudonneElt::scalar(ZModRing ring, std::int64_t a) { return monomial(ring, 0, a); }

DieudonneElt DieudonneElt::monomial(ZModRing ring, int exponent, std::int64_t a) {
  DieudonneElt d(ring);
  d.add_term_(exponent, a);
  return d;
}

void DieudonneElt::add_term_(int exponent, std::int64_t a) {
  a = ring_.reduce(a);
  if (a == 0) return;
  auto it = terms_.find(exponent);
  if (it == terms_.end()) {
    terms_.emplace(exponent, a);
    return;
  }
  it->second = ring_.reduce(it->second + a);
  if (it->second == 0) terms_.erase(it);
}

std::int64_t DieudonneElt::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

DieudonneElt DieudonneElt::operator+(const DieudonneElt& o) const {
  DieudonneElt r = *this;
  for (auto& [k, a] : o.terms_) r.add_term_(k, a);
  return r;
}

DieudonneElt DieudonneElt::operator-() const {
  DieudonneElt r(ring_);
  for (auto& [k, a] : terms_) r.add_term_(k, -a);
  return r;
}

// F^i V^j = p^min(i,j) times the surviving power.
DieudonneElt DieudonneElt::operator*(const DieudonneElt& o) const {
  DieudonneElt r(ring_);
  for (auto& [i, a] : terms_)
    for (auto& [j, b] : o.terms_) {
      std::int64_t c = ring_.mul(a, b);
      if ((i > 0 && j < 0) || (i < 0 && j > 0)) c = ring_.mul(c, ring_.power_of_p(std::min(std::abs(i), std::abs(j))));
      r.add_term_(i + j, c);
    }
  return r;
}

std::string DieudonneElt::to_string() const {
  if (terms_.empty()) return "0";
  auto power = [](char x, int e) { return e == 1 ? std::string(1, x) : std::string(1, x) + "^" + std::to_string(e); };
  std::vector<std::pair<int, std::int64_t>> order;
  if (auto it = terms_.find(0); it != terms_.end()) order.push_back(*it);
  for (auto& t : terms_)
    if (t.first > 0) order.push_back(t);
  for (auto& t : terms_)
    if (t.first < 0) order.push_back(t);
  std::string s;
  for (auto& [k, a] : order) {
    if (!s.empty()) s += " + ";
    if (k == 0) {
      s += std::to_string(a);
      continue;
    }
    std::string m = k > 0 ? power('F', k) : power('V', -k);
    s += a == 1 ? m : std::to_string(a) + "*" + m;
  }
  return s;
}

namespace {

class WordParser {
 public:
  WordParser(std::string_view s, ZModRing r) : s_(s), r_(r) {}

  DieudonneElt run() {
    DieudonneElt e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Error::Kind::parse, "D word \"" + std::string(s_) + "\" at " + std::to_string(pos_) + ": " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) return ++pos_, true;
    return false;
  }
  std::int64_t integer(bool reduce) {
    skip();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected a number");
    std::int64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_++] - '0');
      if (reduce) v = r_.reduce(v);
      if (!reduce && v > 1000000) fail("exponent too large");
    }
    return v;
  }
  DieudonneElt expr() {
    DieudonneElt e = term();
    for (;;) {
      if (eat('+')) e = e + term();
      else if (eat('-')) e = e - term();
      else return e;
    }
  }
  DieudonneElt term() {
    DieudonneElt e = factor();
    while (eat('*')) e = e * factor();
    return e;
  }
  DieudonneElt factor() {
    if (eat('-')) return -factor();
    DieudonneElt base = primary();
    if (!eat('^')) return base;
    std::int64_t e = integer(false);
    DieudonneElt r = DieudonneElt::scalar(r_, 1);
    for (std::int64_t i = 0; i < e; ++i) r = r * base;
    return r;
  }
  DieudonneElt primary() {
    skip();
    if (eat('(')) {
      DieudonneElt e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (eat('F')) return DieudonneElt::F(r_);
    if (eat('V')) return DieudonneElt::V(r_);
    if (eat('p')) return DieudonneElt::scalar(r_, r_.prime());
    return DieudonneElt::scalar(r_, integer(true));
  }

  std::string_view s_;
  ZModRing r_;
  std::size_t pos_ = 0;
};

}  // namespace

DieudonneElt DieudonneElt::parse(std::string_view text, ZModRing ring) { return WordParser(text, ring).run(); }

// ---- presented D-modules ----

DModule::DModule(ZModRing ring, std::vector<unsigned> vbounds, std::vector<std::vector<DieudonneElt>> relations)
    : ring_(ring), vbounds_(std::move(vbounds)), rels_(std::move(relations)) {
  for (unsigned n : vbounds_)
    if (n == 0) throw Error(Error::Kind::domain, "every generator needs a V-nilpotency bound n >= 1");
  for (auto& r : rels_) {
    if (r.size() != vbounds_.size()) throw Error(Error::Kind::domain, "relation length differs from generator count");
    for (auto& d : r)
      if (!(d.ring() == ring_)) throw Error(Error::Kind::domain, "relation over a different p-adic precision");
  }
}

DModule DModule::d_mod_vn(ZModRing ring, unsigned n) {
  if (n == 0) throw Error(Error::Kind::domain, "D/DV^n needs n >= 1");
  return DModule(ring, {n});
}

DModule DModule::alpha_p(ZModRing ring) { return DModule(ring, {1}, {{DieudonneElt::F(ring)}}); }

unsigned DModule::max_vbound() const {
  unsigned n = 0;
  for (unsigned b : vbounds_) n = std::max(n, b);
  return n;
}

DModule DModule::direct_sum(const DModule& o) const {
  if (!(o.ring_ == ring_)) throw Error(Error::Kind::domain, "direct sum over different precisions");
  std::vector<unsigned> vb = vbounds_;
  vb.insert(vb.end(), o.vbounds_.begin(), o.vbounds_.end());
  std::vector<std::vector<DieudonneElt>> rels;
  DieudonneElt zero(ring_);
  for (auto& r : rels_) {
    auto row = r;
    row.resize(vb.size(), zero);
    rels.push_back(std::move(row));
  }
  for (auto& r : o.rels_) {
    std::vector<DieudonneElt> row(ngens(), zero);
    row.insert(row.end(), r.begin(), r.end());
    rels.push_back(std::move(row));
  }
  return DModule(ring_, std::move(vb), std::move(rels));
}

std::size_t DWindow::index(std::size_t gen, int exponent) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i].first == gen && labels[i].second == exponent) return i;
  throw std::out_of_range("no spanning vector for this exponent");
}

ZVec DWindow::act(const DieudonneElt& d, const ZVec& v) const {
  const ZModRing& r = module.ring();
  ZVec out(v.size(), 0);
  for (auto& [k, a] : d.terms()) {
    ZVec w = v;
    const ZMatrix& step = k > 0 ? frobenius : verschiebung;
    for (int i = 0; i < std::abs(k); ++i) w = step.apply(r, w);
    for (std::size_t i = 0; i < w.size(); ++i) out[i] = r.reduce(out[i] + r.mul(a, w[i]));
  }
  return out;
}

// Terms with exponent outside (-n_i, D] lie in DV^{n_i} e_i or in F^{D+1}M,
// so dropping them is exact in the window.
DWindow DModule::window(unsigned fdeg) const {
  const int D = static_cast<int>(fdeg);
  std::vector<std::pair<std::size_t, int>> labels;
  std::vector<std::size_t> start;
  for (std::size_t i = 0; i < ngens(); ++i) {
    start.push_back(labels.size());
    for (int k = 1 - static_cast<int>(vbounds_[i]); k <= D; ++k) labels.emplace_back(i, k);
  }
  const std::size_t s = labels.size();
  auto place = [&](ZVec& v, std::size_t gen, const DieudonneElt& d) {
    const int lo = 1 - static_cast<int>(vbounds_[gen]);
    for (auto& [k, a] : d.terms())
      if (k >= lo && k <= D) {
        auto& slot = v[start[gen] + static_cast<std::size_t>(k - lo)];
        slot = ring_.reduce(slot + a);
      }
  };
  std::vector<ZVec> rels;
  const int nmax = static_cast<int>(max_vbound());
  for (std::size_t i = 0; i < ngens(); ++i) {
    const int n = static_cast<int>(vbounds_[i]);
    for (int m = 1; m <= n + D; ++m) {
      ZVec v(s, 0);
      place(v, i, DieudonneElt::monomial(ring_, m) * DieudonneElt::monomial(ring_, -n));
      rels.push_back(std::move(v));
    }
    for (int m = -(n + D); m <= -1; ++m) {
      ZVec v(s, 0);
      place(v, i, DieudonneElt::monomial(ring_, m) * DieudonneElt::monomial(ring_, D + 1));
      rels.push_back(std::move(v));
    }
  }
  for (auto& row : rels_) {
    int span = 0;
    for (auto& d : row)
      for (auto& t : d.terms()) span = std::max(span, std::abs(t.first));
    const int reach = nmax + D + span;
    for (int m = -reach; m <= reach; ++m) {
      ZVec v(s, 0);
      DieudonneElt x = DieudonneElt::monomial(ring_, m);
      for (std::size_t i = 0; i < ngens(); ++i) place(v, i, x * row[i]);
      if (std::any_of(v.begin(), v.end(), [](std::int64_t a) { return a != 0; })) rels.push_back(std::move(v));
    }
  }
  ZMatrix F(s, s), V(s, s);
  for (std::size_t j = 0; j < s; ++j) {
    auto [gen, k] = labels[j];
    ZVec f(s, 0), w(s, 0);
    DieudonneElt x = DieudonneElt::monomial(ring_, k);
    place(f, gen, DieudonneElt::F(ring_) * x);
    place(w, gen, DieudonneElt::V(ring_) * x);
    for (std::size_t i = 0; i < s; ++i) F.at(i, j) = f[i], V.at(i, j) = w[i];
  }
  return {FiniteModule(ring_, s, std::move(rels)), std::move(F), std::move(V), fdeg, std::move(labels)};
}

namespace {

ZMatrix action_matrix(const DWindow& w, const DieudonneElt& d) {
  const std::size_t s = w.labels.size();
  ZMatrix m(s, s);
  for (std::size_t j = 0; j < s; ++j) {
    ZVec e(s, 0);
    e[j] = 1;
    ZVec col = w.act(d, e);
    for (std::size_t i = 0; i < s; ++i) m.at(i, j) = col[i];
  }
  return m;
}

// Generators of {y in Z^n : A y lies in the lattice spanned by the rows of
// lattice, blockwise}. Each block of A's rows (of width lattice_width) is
// matched against the same lattice.
std::vector<ZVec> preimage_of_lattice(const ZModRing& r, const ZMatrix& a, const std::vector<ZVec>& lattice,
                                      std::size_t width) {
  const std::size_t blocks = width == 0 ? 0 : a.rows() / width;
  const std::size_t n = a.cols(), cols = n + blocks * lattice.size();
  ZMatrix big(a.rows(), cols);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) big.at(i, j) = a.at(i, j);
  for (std::size_t b = 0; b < blocks; ++b)
    for (std::size_t l = 0; l < lattice.size(); ++l)
      for (std::size_t i = 0; i < width; ++i)
        big.at(b * width + i, n + b * lattice.size() + l) = r.reduce(-lattice[l][i]);
  std::vector<ZVec> out;
  for (auto& k : kernel(r, big)) {
    ZVec y(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(n));
    if (std::any_of(y.begin(), y.end(), [](std::int64_t v) { return v != 0; })) out.push_back(std::move(y));
  }
  return out;
}

FiniteModule power_module(const FiniteModule& m, std::size_t t) {
  std::vector<ZVec> rels;
  const std::size_t s = m.ngens();
  for (std::size_t b = 0; b < t; ++b)
    for (auto& rel : m.relations()) {
      ZVec v(s * t, 0);
      std::copy(rel.begin(), rel.end(), v.begin() + static_cast<std::ptrdiff_t>(b * s));
      rels.push_back(std::move(v));
    }
  return FiniteModule(m.ring(), s * t, std::move(rels));
}

}  // namespace

DHomSpace hom_d(const DModule& M, const DModule& target, unsigned fdeg) {
  if (!(M.ring() == target.ring())) throw Error(Error::Kind::domain, "Hom over different precisions");
  DWindow W = target.window(fdeg);
  const ZModRing& r = M.ring();
  const std::size_t s = W.labels.size(), t = M.ngens();
  // Constraints: V^{n_i} y_i = 0 and every relation of M.
  std::vector<std::vector<DieudonneElt>> constraints;
  for (std::size_t i = 0; i < t; ++i) {
    std::vector<DieudonneElt> row(t, DieudonneElt(r));
    row[i] = DieudonneElt::monomial(r, -static_cast<int>(M.vbounds()[i]));
    constraints.push_back(std::move(row));
  }
  constraints.insert(constraints.end(), M.relations().begin(), M.relations().end());
  ZMatrix A(constraints.size() * s, t * s);
  for (std::size_t c = 0; c < constraints.size(); ++c)
    for (std::size_t i = 0; i < t; ++i) {
      ZMatrix act = action_matrix(W, constraints[c][i]);
      for (std::size_t a = 0; a < s; ++a)
        for (std::size_t b = 0; b < s; ++b) A.at(c * s + a, i * s + b) = act.at(a, b);
    }
  std::vector<ZVec> sols = t == 0 ? std::vector<ZVec>{} : preimage_of_lattice(r, A, W.module.relations(), s);
  FiniteModule P = power_module(W.module, t);
  DHomSpace out{W, {}, P.span_length(sols)};
  for (auto& y : sols) {
    std::vector<ZVec> images;
    for (std::size_t i = 0; i < t; ++i)
      images.emplace_back(y.begin() + static_cast<std::ptrdiff_t>(i * s), y.begin() + static_cast<std::ptrdiff_t>((i + 1) * s));
    out.generators.push_back(std::move(images));
  }
  return out;
}

bool DHomSpace::contains(const std::vector<ZVec>& images) const {
  const std::size_t t = images.size(), s = target.labels.size();
  FiniteModule P = power_module(target.module, t);
  std::vector<ZVec> gens;
  for (auto& g : generators) {
    ZVec v;
    for (auto& part : g) v.insert(v.end(), part.begin(), part.end());
    gens.push_back(std::move(v));
  }
  ZVec y;
  for (auto& part : images) {
    if (part.size() != s) return false;
    y.insert(y.end(), part.begin(), part.end());
  }
  unsigned before = P.span_length(gens);
  gens.push_back(std::move(y));
  return P.span_length(gens) == before;
}

// ---- the Lie functor ----

namespace {

Coeff residue(Field f, std::int64_t a) { return Coeff::from_int(f, static_cast<long>(a)); }

// L(d) on k^n: F-terms vanish, V^i acts by the i-fold shift, scalars by
// their residue mod p.
Matrix lie_of(Field f, const DieudonneElt& d, unsigned n) {
  Matrix m(f, n, n);
  for (auto& [k, a] : d.terms()) {
    if (k > 0) continue;
    const unsigned shift = static_cast<unsigned>(-k);
    for (unsigned c = 0; c + shift < n; ++c) m.at(c + shift, c) += residue(f, a);
  }
  return m;
}

// Cokernel of a set of column vectors in k^N: complement coordinates are
// the non-pivot positions of the row-reduced relation span.
struct Cokernel {
  Matrix reduced;
  std::vector<std::size_t> pivots, free;

  Cokernel(Field f, std::size_t dim, const std::vector<std::vector<Coeff>>& vectors) : reduced(f, 0, dim) {
    Matrix m(f, 0, dim);
    for (auto& v : vectors) m.append_row(v);
    EchelonForm e = row_reduce(std::move(m));
    reduced = std::move(e.reduced);
    pivots = std::move(e.pivots);
    for (std::size_t j = 0; j < dim; ++j)
      if (std::find(pivots.begin(), pivots.end(), j) == pivots.end()) free.push_back(j);
  }
  std::vector<Coeff> coords(std::vector<Coeff> v) const {
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      Coeff c = v[pivots[r]];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= c * reduced.at(r, j);
    }
    std::vector<Coeff> out;
    for (std::size_t j : free) out.push_back(v[j]);
    return out;
  }
};

Cokernel lie_cokernel(const DModule& M, Field f, unsigned n) {
  const std::size_t t = M.ngens(), dim = t * n;
  std::vector<std::vector<Coeff>> rels;
  auto add_block_columns = [&](const std::vector<DieudonneElt>& row) {
    std::vector<Matrix> blocks;
    for (auto& d : row) blocks.push_back(lie_of(f, d, n));
    for (unsigned a = 0; a < n; ++a) {
      std::vector<Coeff> v(dim, Coeff::zero(f));
      for (std::size_t i = 0; i < t; ++i)
        for (unsigned b = 0; b < n; ++b) v[i * n + b] = blocks[i].at(b, a);
      rels.push_back(std::move(v));
    }
  };
  for (std::size_t i = 0; i < t; ++i) {
    std::vector<DieudonneElt> row(t, DieudonneElt(M.ring()));
    row[i] = DieudonneElt::monomial(M.ring(), -static_cast<int>(M.vbounds()[i]));
    add_block_columns(row);
  }
  for (auto& row : M.relations()) add_block_columns(row);
  return Cokernel(f, dim, rels);
}

}  // namespace

Matrix LieImage::scalar_action(std::int64_t a) const {
  Field f = v_action.field();
  Matrix m(f, v_action.rows(), v_action.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, i) = residue(f, a);
  return m;
}

Matrix lie_of_endomorphism(const DModule& M, const std::vector<std::vector<DieudonneElt>>& images) {
  if (images.size() != M.ngens()) throw Error(Error::Kind::domain, "endomorphism needs one image per generator");
  Field f = Field::prime(M.ring().prime());
  const unsigned n = std::max(1u, M.max_vbound());
  const std::size_t t = M.ngens();
  Cokernel Q = lie_cokernel(M, f, n);
  Matrix out(f, Q.free.size(), Q.free.size());
  for (std::size_t c = 0; c < Q.free.size(); ++c) {
    const std::size_t gen = Q.free[c] / n, a = Q.free[c] % n;
    if (images[gen].size() != t) throw Error(Error::Kind::domain, "image has the wrong number of components");
    std::vector<Coeff> v(t * n, Coeff::zero(f));
    for (std::size_t j = 0; j < t; ++j) {
      Matrix L = lie_of(f, images[gen][j], n);
      for (unsigned b = 0; b < n; ++b) v[j * n + b] += L.at(b, a);
    }
    auto col = Q.coords(std::move(v));
    for (std::size_t r = 0; r < col.size(); ++r) out.at(r, c) = col[r];
  }
  return out;
}

LieImage lie_functor(const DModule& M) {
  Field f = Field::prime(M.ring().prime());
  std::vector<std::vector<DieudonneElt>> v_images;
  for (std::size_t i = 0; i < M.ngens(); ++i) {
    std::vector<DieudonneElt> row(M.ngens(), DieudonneElt(M.ring()));
    row[i] = DieudonneElt::V(M.ring());
    v_images.push_back(std::move(row));
  }
  Matrix v = lie_of_endomorphism(M, v_images);
  const std::size_t dim = v.rows();
  return {DModule(M.ring(), std::vector<unsigned>(dim, 1)), std::move(v), Matrix(f, dim, dim)};
}

bool is_smooth(const DModule& M, unsigned fdeg) {
  if (fdeg == 0) throw Error(Error::Kind::config, "smoothness test needs an F-degree bound of at least 1");
  DWindow W = M.window(fdeg);
  const ZModRing& r = M.ring();
  const std::size_t s = W.labels.size();
  std::vector<ZVec> fcols, topcols;
  ZMatrix Fd = ZMatrix::identity(s);
  for (unsigned i = 0; i < fdeg; ++i) Fd = W.frobenius.multiply(r, Fd);
  for (std::size_t j = 0; j < s; ++j) fcols.push_back(W.frobenius.column(j)), topcols.push_back(Fd.column(j));
  const unsigned kernel_len = W.module.length() - W.module.span_length(fcols);
  return kernel_len == W.module.span_length(topcols);
}

// ---- Hom(U, W_m) windows ----

namespace {

unsigned weighted_degree(const Mono& m, const std::vector<unsigned>& w) {
  unsigned d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * w[i];
  return d;
}

void monomials_of_weight(const std::vector<unsigned>& w, std::size_t var, unsigned left, Mono& cur,
                         std::vector<Mono>& out) {
  if (var == w.size()) {
    if (left == 0) out.push_back(cur);
    return;
  }
  for (unsigned e = 0; e * w[var] <= left; ++e) {
    cur[var] = e;
    monomials_of_weight(w, var + 1, left - e * w[var], cur, out);
  }
  cur[var] = 0;
}

std::vector<Mono> monomials_of_weight(const std::vector<unsigned>& w, unsigned weight) {
  std::vector<Mono> out;
  Mono cur(w.size(), 0);
  monomials_of_weight(w, 0, weight, cur, out);
  return out;
}

std::int64_t residue_of(const Coeff& c) { return c.to_mpq().get_num().get_si(); }

// Caches powers of the comultiplication images for f(uv) - f(u) - f(v).
class Differential {
 public:
  explicit Differential(const HopfAlgebra& U) : n_(U.ngens()), field_(U.field()) {
    for (auto& d : U.comul()) delta_.push_back(d.body());
    powers_.resize(n_);
  }
  Poly of(const Poly& f) {
    Poly out(field_, 2 * n_);
    for (auto& t : f.terms()) {
      Poly m = Poly::constant(field_, 2 * n_, t.coeff);
      for (std::size_t i = 0; i < n_; ++i)
        if (t.mono[i] > 0) m = m * power(i, t.mono[i]);
      out += m;
    }
    std::vector<std::size_t> left(n_), right(n_);
    for (std::size_t i = 0; i < n_; ++i) left[i] = i, right[i] = n_ + i;
    return out - f.remap(left, 2 * n_) - f.remap(right, 2 * n_);
  }

 private:
  const Poly& power(std::size_t var, unsigned e) {
    auto& cache = powers_[var];
    if (cache.empty()) cache.push_back(Poly::constant(field_, 2 * n_, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * delta_[var]);
    return cache[e];
  }
  std::size_t n_;
  Field field_;
  std::vector<Poly> delta_;
  std::vector<std::vector<Poly>> powers_;
};

// Columns are the polynomials, rows the monomials they touch.
Matrix coefficient_matrix(Field f, const std::vector<Poly>& cols, std::map<Mono, std::size_t>& rows) {
  for (auto& c : cols)
    for (auto& t : c.terms()) rows.emplace(t.mono, rows.size());
  Matrix m(f, rows.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (auto& t : cols[j].terms()) m.at(rows.at(t.mono), j) = t.coeff;
  return m;
}

Poly combine(Field f, std::size_t nvars, const std::vector<Poly>& basis, const std::vector<Coeff>& lambda) {
  Poly out(f, nvars);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!lambda[i].is_zero()) out += basis[i] * lambda[i];
  return out;
}

bool is_commutative(const HopfAlgebra& U) {
  const std::size_t n = U.ngens();
  std::vector<std::size_t> swap(2 * n);
  for (std::size_t i = 0; i < n; ++i) swap[i] = n + i, swap[n + i] = i;
  for (auto& d : U.comul())
    if (d.body().remap(swap, 2 * n) != d.body()) return false;
  return true;
}

}  // namespace

namespace {

void check_weights(const HopfAlgebra& U, const std::vector<unsigned>& w) {
  const std::size_t n = U.ngens();
  if (w.size() != n) throw Error(Error::Kind::domain, "one weight per coordinate is needed");
  std::vector<unsigned> doubled(2 * n);
  for (std::size_t i = 0; i < 2 * n; ++i) {
    if (w[i % n] == 0) throw Error(Error::Kind::domain, "weights must be positive");
    doubled[i] = w[i % n];
  }
  for (std::size_t g = 0; g < n; ++g)
    for (auto& t : U.comul()[g].body().terms())
      if (weighted_degree(t.mono, doubled) != w[g])
        throw Error(Error::Kind::unsupported, "comultiplication of " + U.gens()[g] + " is not weighted homogeneous");
}

}  // namespace

std::vector<unsigned> unipotent_weights(const HopfAlgebra& U) {
  const std::size_t n = U.ngens();
  std::vector<unsigned> w(n, 0);
  auto is_self = [&](const Mono& m, std::size_t g) {
    unsigned total = 0;
    for (auto e : m) total += e;
    return total == 1 && (m[g] == 1 || m[n + g] == 1);
  };
  auto weight_of = [&](const Mono& m) -> std::optional<unsigned> {
    unsigned d = 0;
    for (std::size_t i = 0; i < 2 * n; ++i) {
      if (m[i] == 0) continue;
      if (w[i % n] == 0) return std::nullopt;
      d += m[i] * w[i % n];
    }
    return d;
  };
  for (std::size_t assigned = 0; assigned < n;) {
    bool progress = false;
    for (std::size_t g = 0; g < n; ++g) {
      if (w[g] != 0) continue;
      std::optional<unsigned> forced;
      bool ready = true;
      for (auto& t : U.comul()[g].body().terms()) {
        if (is_self(t.mono, g)) continue;
        auto d = weight_of(t.mono);
        if (!d) {
          ready = false;
          break;
        }
        if (forced && *forced != *d)
          throw Error(Error::Kind::unsupported, "comultiplication of " + U.gens()[g] + " is not weighted homogeneous");
        forced = d;
      }
      if (!ready) continue;
      w[g] = forced.value_or(1);
      ++assigned, progress = true;
    }
    if (!progress) throw Error(Error::Kind::unsupported, "no positive grading makes the comultiplication homogeneous");
  }
  check_weights(U, w);
  return w;
}

UnipotentModule::UnipotentModule(HopfAlgebra U, unsigned m, unsigned fdeg)
    : U_(std::move(U)), m_(m), fdeg_(fdeg), p_(U_.field().characteristic()),
      module_(ZModRing(p_ == 0 ? 2 : p_, m), 0), V_(0, 0) {}

const UnipotentModule::Layer* UnipotentModule::layer_(unsigned weight) const {
  for (auto& l : layers_)
    if (l.weight == weight) return &l;
  return nullptr;
}

std::vector<Coeff> UnipotentModule::additive_coords_(const Poly& h, unsigned bound) const {
  const Field f = U_.field();
  std::size_t count = 0;
  for (auto& l : layers_)
    if (l.weight <= bound) count += l.basis.size();
  std::vector<Coeff> out(count, Coeff::zero(f));
  std::map<unsigned, std::vector<Term>> parts;
  for (auto& t : h.terms()) parts[weighted_degree(t.mono, weights_)].push_back(t);
  for (auto& [wt, terms] : parts) {
    if (wt > bound)
      throw Error(Error::Kind::bounds, "component of weight " + std::to_string(wt) + " exceeds the window bound " +
                                           std::to_string(bound) + "; raise the F-degree bound");
    const Layer* l = layer_(wt);
    if (l == nullptr) throw Error(Error::Kind::domain, "not a homomorphism: no additive functions of weight " + std::to_string(wt));
    std::map<Mono, std::size_t> rows;
    for (auto& mono : l->monos) rows.emplace(mono, rows.size());
    Matrix A = coefficient_matrix(f, l->basis, rows);
    std::vector<Coeff> b(rows.size(), Coeff::zero(f));
    for (auto& t : terms) {
      auto it = rows.find(t.mono);
      if (it == rows.end()) throw Error(Error::Kind::domain, "not a homomorphism: non-additive term");
      b[it->second] = t.coeff;
    }
    auto x = solve(A, b);
    if (!x) throw Error(Error::Kind::domain, "not a homomorphism: non-additive component");
    std::size_t off = 0;
    for (auto& ll : layers_) {
      if (&ll == l) break;
      off += ll.basis.size();
    }
    for (std::size_t i = 0; i < x->size(); ++i) out[off + i] = (*x)[i];
  }
  return out;
}

std::vector<Poly> UnipotentModule::witt_add(const std::vector<Poly>& a, const std::vector<Poly>& b) const {
  if (m_ == 1) return {a[0] + b[0]};
  std::vector<Poly> args = {a[0], a[1], b[0], b[1]};
  return {wsum_[0].compose(args), wsum_[1].compose(args)};
}

std::vector<Poly> UnipotentModule::witt_neg(const std::vector<Poly>& a) const {
  if (m_ == 1) return {-a[0]};
  return {wneg_[0].compose(a), wneg_[1].compose(a)};
}

ZVec UnipotentModule::coordinates(const std::vector<Poly>& hom) const {
  if (hom.size() != m_) throw Error(Error::Kind::domain, "homomorphism has the wrong Witt length");
  const Field f = U_.field();
  unsigned bound = 1;
  for (unsigned i = 0; i < fdeg_; ++i) bound *= p_;
  ZVec out(gens_.size(), 0);
  if (m_ == 1) {
    auto a = additive_coords_(hom[0], bound);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = residue_of(a[i]);
    return out;
  }
  auto alpha = additive_coords_(hom[0], bound);
  std::vector<Coeff> lambda;
  std::vector<Poly> rest = hom;
  if (!lifted_.empty()) {
    Matrix A(f, alpha.size(), lifted_.size());
    for (std::size_t j = 0; j < lifted_.size(); ++j)
      for (std::size_t i = 0; i < alpha.size(); ++i) A.at(i, j) = lifted_[j][i];
    auto x = solve(A, alpha);
    if (!x) throw Error(Error::Kind::domain, "not a homomorphism into W_2: the first component does not lift");
    lambda = *x;
    std::vector<Poly> acc = {Poly(f, U_.ngens()), Poly(f, U_.ngens())};
    for (std::size_t i = 0; i < lambda.size(); ++i)
      for (std::int64_t c = residue_of(lambda[i]); c > 0; --c) acc = witt_add(acc, gens_[i]);
    rest = witt_add(hom, witt_neg(acc));
  } else if (!hom[0].is_zero()) {
    throw Error(Error::Kind::domain, "not a homomorphism into W_2: the first component does not lift");
  }
  if (!rest[0].is_zero()) throw std::logic_error("Witt subtraction left a first component");
  auto mu = additive_coords_(rest[1], bound * p_);
  for (std::size_t i = 0; i < lambda.size(); ++i) out[i] = residue_of(lambda[i]);
  for (std::size_t j = 0; j < mu.size(); ++j) out[lifted_.size() + j] = residue_of(mu[j]);
  return out;
}

std::vector<Poly> UnipotentModule::element(const ZVec& coords) const {
  const Field f = U_.field();
  std::vector<Poly> acc(m_, Poly(f, U_.ngens()));
  for (std::size_t i = 0; i < coords.size(); ++i)
    for (std::int64_t c = module_.ring().reduce(coords[i]); c > 0; --c) acc = witt_add(acc, gens_[i]);
  return acc;
}

UnipotentModule dieudonne_of_unipotent(const HopfAlgebra& U, unsigned m, unsigned fdeg,
                                       std::optional<std::vector<unsigned>> weights) {
  const Field f = U.field();
  if (f.is_rational()) throw Error(Error::Kind::domain, "Dieudonne modules need a group over F_p");
  if (U.irank() != 0) throw Error(Error::Kind::domain, "Dieudonne modules need a group over k");
  if (m < 1 || m > 2) throw Error(Error::Kind::unsupported, "Witt length must be 1 or 2");
  if (!U.algebra().relations().empty())
    throw Error(Error::Kind::unsupported, "coordinate ring of " + U.name() + " is not a polynomial ring");
  for (auto& c : U.counit())
    if (!c.body().is_zero()) throw Error(Error::Kind::unsupported, "the identity of " + U.name() + " is not the origin");
  if (!is_commutative(U)) throw Error(Error::Kind::unsupported, U.name() + " is not commutative");

  UnipotentModule M(U, m, fdeg);
  const unsigned p = f.characteristic();
  if (weights) check_weights(U, *weights);
  M.weights_ = weights ? *weights : unipotent_weights(U);
  unsigned bound = 1;
  for (unsigned i = 0; i < fdeg; ++i) {
    bound *= p;
    if (bound > (1u << 16)) throw Error(Error::Kind::bounds, "F-degree bound too large for the weight window");
  }
  const unsigned top = m == 2 ? bound * p : bound;
  const std::size_t n = U.ngens();
  Differential diff(U);

  for (unsigned wt = 1; wt <= top; ++wt) {
    auto monos = monomials_of_weight(M.weights_, wt);
    if (monos.empty()) continue;
    std::vector<Poly> cols;
    for (auto& mono : monos) cols.push_back(diff.of(Poly::monomial(f, mono, Coeff::one(f))));
    std::map<Mono, std::size_t> rows;
    Matrix A = coefficient_matrix(f, cols, rows);
    auto ker = kernel(A);
    if (ker.empty()) continue;
    UnipotentModule::Layer layer{wt, monos, {}};
    for (auto& v : ker) {
      Poly h(f, n);
      for (std::size_t i = 0; i < monos.size(); ++i)
        if (!v[i].is_zero()) h += Poly::monomial(f, monos[i], v[i]);
      layer.basis.push_back(std::move(h));
    }
    M.layers_.push_back(std::move(layer));
  }

  auto layer_count = [&](unsigned upto) {
    std::size_t c = 0;
    for (auto& l : M.layers_)
      if (l.weight <= upto) c += l.basis.size();
    return c;
  };
  for (auto& l : M.layers_) {
    if (l.weight * p <= bound) continue;
    if (l.weight > bound) break;
    const auto* below = l.weight % p == 0 ? M.layer_(l.weight / p) : nullptr;
    if (below == nullptr || below->basis.size() < l.basis.size())
      M.warnings_.push_back("additive functions of weight " + std::to_string(l.weight) +
                            " appear near the window bound; a larger F-degree bound may add generators");
  }

  if (m == 1) {
    for (auto& l : M.layers_)
      for (auto& h : l.basis) M.gens_.push_back({h});
    M.module_ = FiniteModule(ZModRing(p, 1), M.gens_.size());
    M.V_ = ZMatrix(M.gens_.size(), M.gens_.size());
    return M;
  }

  WittPolynomials wp = WittPolynomials::over_rationals(p, 2).reduced(f);
  M.wsum_ = wp.sum;
  M.wneg_ = wp.negation;
  // S_1 = x_1 + y_1 + carry(x_0, y_0).
  const Poly carry = wp.sum[1] - Poly::variable(f, 4, 1) - Poly::variable(f, 4, 3);
  std::vector<std::size_t> left(n), right(n);
  for (std::size_t i = 0; i < n; ++i) left[i] = i, right[i] = n + i;
  auto carry_of = [&](const Poly& h) {
    Poly zero(f, 2 * n);
    std::vector<Poly> args = {h.remap(left, 2 * n), zero, h.remap(right, 2 * n), zero};
    return carry.compose(args);
  };

  // A first component h lifts iff carry(h(u), h(v)) is a coboundary; the
  // class is F_p-linear in h, so the liftable ones form a subspace.
  std::vector<std::vector<Poly>> lifts;
  const std::size_t first_count = layer_count(bound);
  std::size_t offset = 0;
  for (auto& l : M.layers_) {
    if (l.weight > bound) break;
    const std::size_t a = l.basis.size();
    std::vector<Poly> cols;
    for (auto& h : l.basis) cols.push_back(carry_of(h));
    auto higher = monomials_of_weight(M.weights_, l.weight * p);
    std::vector<Poly> dcols;
    for (auto& mono : higher) dcols.push_back(diff.of(Poly::monomial(f, mono, Coeff::one(f))));
    std::vector<Poly> all = cols;
    all.insert(all.end(), dcols.begin(), dcols.end());
    std::map<Mono, std::size_t> rows;
    Matrix A = coefficient_matrix(f, all, rows);
    Matrix lam(f, 0, a);
    for (auto& v : kernel(A)) lam.append_row(std::vector<Coeff>(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(a)));
    EchelonForm e = row_reduce(std::move(lam));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      std::vector<Coeff> lambda(a);
      for (std::size_t i = 0; i < a; ++i) lambda[i] = e.reduced.at(r, i);
      Poly f0 = combine(f, n, l.basis, lambda);
      Poly rhs = carry_of(f0);
      std::map<Mono, std::size_t> rows2;
      for (auto& t : rhs.terms()) rows2.emplace(t.mono, rows2.size());
      Matrix B = coefficient_matrix(f, dcols, rows2);
      std::vector<Coeff> b(rows2.size(), Coeff::zero(f));
      for (auto& t : rhs.terms()) b[rows2.at(t.mono)] = t.coeff;
      auto g = solve(B, b);
      if (!g) throw std::logic_error("liftable first component without a lift");
      Poly f1(f, n);
      for (std::size_t i = 0; i < higher.size(); ++i)
        if (!(*g)[i].is_zero()) f1 += Poly::monomial(f, higher[i], (*g)[i]);
      lifts.push_back({f0, f1});
      std::vector<Coeff> global(first_count, Coeff::zero(f));
      for (std::size_t i = 0; i < a; ++i) global[offset + i] = lambda[i];
      M.lifted_.push_back(std::move(global));
    }
    offset += a;
  }
  M.gens_ = lifts;
  for (auto& l : M.layers_)
    for (auto& h : l.basis) M.gens_.push_back({Poly(f, n), h});
  const std::size_t s = M.gens_.size();
  ZModRing ring(p, 2);
  M.module_ = FiniteModule(ring, s);
  std::vector<ZVec> rels;
  for (std::size_t i = 0; i < s; ++i) {
    std::vector<Poly> multiple(2, Poly(f, n));
    for (unsigned c = 0; c < p; ++c) multiple = M.witt_add(multiple, M.gens_[i]);
    ZVec rel = M.coordinates(multiple);
    for (auto& x : rel) x = ring.reduce(-x);
    rel[i] = ring.reduce(rel[i] + p);
    rels.push_back(std::move(rel));
  }
  M.module_ = FiniteModule(ring, s, std::move(rels));
  M.V_ = ZMatrix(s, s);
  for (std::size_t j = 0; j < s; ++j) {
    ZVec col = M.coordinates({Poly(f, n), M.gens_[j][0]});
    for (std::size_t i = 0; i < s; ++i) M.V_.at(i, j) = col[i];
  }
  return M;
}

ModuleMap induced_map(const UnipotentModule& from, const UnipotentModule& to, const std::vector<Poly>& comorphism) {
  if (from.witt_length() != to.witt_length()) throw Error(Error::Kind::domain, "windows of different Witt length");
  if (comorphism.size() != from.group().ngens())
    throw Error(Error::Kind::domain, "comorphism needs one image per coordinate of the source window's group");
  const std::size_t s = from.generators().size();
  ZMatrix mat(to.generators().size(), s);
  for (std::size_t j = 0; j < s; ++j) {
    std::vector<Poly> g;
    for (auto& c : from.generators()[j]) g.push_back(c.compose(comorphism));
    ZVec col = to.coordinates(g);
    for (std::size_t i = 0; i < col.size(); ++i) mat.at(i, j) = col[i];
  }
  return {from.module(), to.module(), std::move(mat)};
}

ModuleMap frobenius_map(const UnipotentModule& lower, const UnipotentModule& upper) {
  const unsigned p = lower.group().field().characteristic();
  ZMatrix mat(upper.generators().size(), lower.generators().size());
  for (std::size_t j = 0; j < lower.generators().size(); ++j) {
    std::vector<Poly> g;
    for (auto& c : lower.generators()[j]) g.push_back(c.pow(p));
    ZVec col = upper.coordinates(g);
    for (std::size_t i = 0; i < col.size(); ++i) mat.at(i, j) = col[i];
  }
  return {lower.module(), upper.module(), std::move(mat)};
}

bool is_smooth(const UnipotentModule& M) {
  if (M.fdeg() == 0) throw Error(Error::Kind::config, "smoothness test needs an F-degree bound of at least 1");
  UnipotentModule lower = dieudonne_of_unipotent(M.group(), M.witt_length(), M.fdeg() - 1, M.weights());
  return frobenius_map(lower, M).injective();
}

unsigned frobenius_cokernel_length(const UnipotentModule& M) {
  if (M.fdeg() == 0) return M.module().length();
  UnipotentModule lower = dieudonne_of_unipotent(M.group(), M.witt_length(), M.fdeg() - 1, M.weights());
  return M.module().length() - frobenius_map(lower, M).image_length();
}

std::optional<std::vector<ZVec>> find_splitting(const ModuleMap& projection, const ZMatrix& v_middle,
                                                const ZMatrix& v_quotient) {
  const FiniteModule& B = projection.source;
  const FiniteModule& C = projection.target;
  const ZModRing& r = B.ring();
  const std::size_t sb = B.ngens(), sc = C.ngens();
  const auto& LB = B.relations();
  const auto& LC = C.relations();
  // Unknowns: s(c_j) for every generator of C, then one slack block per
  // lattice membership.
  const std::size_t blocks_b = LC.size() + sc, blocks_c = sc;
  const std::size_t nvars = sc * sb + blocks_b * LB.size() + blocks_c * LC.size();
  const std::size_t nrows = blocks_b * sb + blocks_c * sc;
  ZMatrix A(nrows, nvars);
  ZVec rhs(nrows, 0);
  std::size_t row = 0, slack = sc * sb;
  auto lattice_slack = [&](const std::vector<ZVec>& L, std::size_t width) {
    for (std::size_t l = 0; l < L.size(); ++l)
      for (std::size_t i = 0; i < width; ++i) A.at(row + i, slack + l) = r.reduce(-L[l][i]);
    slack += L.size();
  };
  // Relations of C map into relations of B.
  for (auto& rho : LC) {
    for (std::size_t j = 0; j < sc; ++j)
      for (std::size_t i = 0; i < sb; ++i) A.at(row + i, j * sb + i) = r.reduce(rho[j]);
    lattice_slack(LB, sb);
    row += sb;
  }
  // V s(c_j) = s(V c_j).
  for (std::size_t j = 0; j < sc; ++j) {
    for (std::size_t k = 0; k < sc; ++k)
      for (std::size_t i = 0; i < sb; ++i) A.at(row + i, k * sb + i) = r.reduce(A.at(row + i, k * sb + i) + v_quotient.at(k, j));
    for (std::size_t i = 0; i < sb; ++i)
      for (std::size_t a = 0; a < sb; ++a) A.at(row + i, j * sb + a) = r.reduce(A.at(row + i, j * sb + a) - v_middle.at(i, a));
    lattice_slack(LB, sb);
    row += sb;
  }
  // pi s(c_j) = c_j.
  for (std::size_t j = 0; j < sc; ++j) {
    for (std::size_t i = 0; i < sc; ++i)
      for (std::size_t a = 0; a < sb; ++a) A.at(row + i, j * sb + a) = projection.matrix.at(i, a);
    rhs[row + j] = 1;
    lattice_slack(LC, sc);
    row += sc;
  }
  auto x = solve(r, A, rhs);
  if (!x) return std::nullopt;
  std::vector<ZVec> out;
  for (std::size_t j = 0; j < sc; ++j)
    out.emplace_back(x->begin() + static_cast<std::ptrdiff_t>(j * sb), x->begin() + static_cast<std::ptrdiff_t>((j + 1) * sb));
  return out;
}

DIExtension classify(const Deformation& D, unsigned m, unsigned fdeg) {
  const HopfAlgebra& U = D.base();
  WeilExtension we = extension_of(D);
  const HopfAlgebra& E = we.restriction.result();
  HopfAlgebra K = we.extension.kernel();
  std::vector<Poly> pi, iota;
  for (auto& d : we.restriction.projection()) pi.push_back(d.body());
  std::vector<Poly> incl;
  for (auto& d : we.extension.inclusion()) incl.push_back(d.body());
  for (auto& d : we.to_restriction) iota.push_back(d.body().compose(incl));

  // Kernel coordinates take the weight of the coordinate of E they land
  // in, so that f -> f o iota preserves the window.
  auto wE = unipotent_weights(E);
  std::vector<unsigned> wK(K.ngens(), 0);
  for (std::size_t g = 0; g < iota.size(); ++g)
    if (iota[g].size() == 1 && mono_degree(iota[g].lead().mono) == 1) {
      const auto& mono = iota[g].lead().mono;
      const auto var = static_cast<std::size_t>(std::find(mono.begin(), mono.end(), 1u) - mono.begin());
      if (wK[var] == 0) wK[var] = wE[g];
    }
  for (auto& w : wK)
    if (w == 0) w = 1;
  for (std::size_t g = 0; g < iota.size(); ++g)
    for (auto& t : iota[g].terms())
      if (weighted_degree(t.mono, wK) != wE[g])
        throw Error(Error::Kind::unsupported, "kernel inclusion is not weighted homogeneous");

  UnipotentModule sub = dieudonne_of_unipotent(U, m, fdeg);
  UnipotentModule middle = dieudonne_of_unipotent(E, m, fdeg);
  UnipotentModule quotient = dieudonne_of_unipotent(K, m, fdeg, wK);
  ModuleMap inclusion = induced_map(sub, middle, pi);
  ModuleMap projection = induced_map(middle, quotient, iota);
  DIExtension out{sub, middle, quotient, inclusion, projection};
  out.composite_zero = compose(projection, inclusion).is_zero();
  out.injective = inclusion.injective();
  out.surjective = projection.surjective();
  const unsigned ls = sub.module().length(), lm = middle.module().length(), lq = quotient.module().length();
  out.exact = out.composite_zero && out.injective && out.surjective && lm == ls + lq;
  if (!out.exact)
    throw Error(Error::Kind::bounds, "sequence not exact in the window (lengths " + std::to_string(ls) + ", " +
                                         std::to_string(lm) + ", " + std::to_string(lq) + ", composite " +
                                         (out.composite_zero ? "zero" : "nonzero") + "); try other bounds");

  out.lie_dim_sub = frobenius_cokernel_length(sub);
  out.lie_dim_quotient = frobenius_cokernel_length(quotient);
  const Field f = U.field();
  const std::size_t n = U.ngens();
  Matrix tangent(f, 0, m * n);
  for (auto& g : sub.generators()) {
    std::vector<Coeff> row(m * n, Coeff::zero(f));
    for (unsigned c = 0; c < m; ++c)
      for (std::size_t v = 0; v < n; ++v) {
        Mono mono(n, 0);
        mono[v] = 1;
        row[c * n + v] = g[c].coefficient(mono);
      }
    tangent.append_row(row);
  }
  out.tangent_rank = static_cast<unsigned>(rank(tangent));
  out.lie_certified = out.lie_dim_sub * D.rank() == out.lie_dim_quotient && out.tangent_rank == out.lie_dim_sub;
  out.splitting = find_splitting(projection, middle.verschiebung(), quotient.verschiebung());
  return out;
}

}  // namespace wx
