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

#include "weilext/algebra.hh"

#include <algorithm>
#include <bit>

#include "weilext/groebner.hh"

namespace wx {

NilShape NilShape::dual(unsigned rank) {
  NilShape s;
  s.nparams_ = rank;
  s.masks_.push_back(0);
  for (unsigned j = 0; j < rank; ++j) s.masks_.push_back(1u << j);
  return s;
}

NilShape NilShape::tensor(const NilShape& a, const NilShape& b) {
  NilShape s;
  s.nparams_ = a.nparams_ + b.nparams_;
  for (auto mb : b.masks_)
    for (auto ma : a.masks_) s.masks_.push_back(ma | (mb << a.nparams_));
  return s;
}

int NilShape::index(std::uint32_t mask) const {
  for (std::size_t i = 0; i < masks_.size(); ++i)
    if (masks_[i] == mask) return static_cast<int>(i);
  return -1;
}

DualElement::DualElement(NilShape shape, Field f, std::size_t nvars) : shape_(std::move(shape)) {
  parts_.assign(shape_.size(), Poly(f, nvars));
}

DualElement::DualElement(NilShape shape, Poly body) : shape_(std::move(shape)) {
  parts_.assign(shape_.size(), Poly(body.field(), body.nvars()));
  parts_[0] = std::move(body);
}

DualElement DualElement::param(NilShape shape, Field f, std::size_t nvars, unsigned j) {
  DualElement e(std::move(shape), f, nvars);
  e.set_part(1u << j, Poly::constant(f, nvars, 1));
  return e;
}

const Poly& DualElement::part(std::uint32_t mask) const {
  static thread_local std::vector<Poly> zeros;
  int i = shape_.index(mask);
  if (i >= 0) return parts_[i];
  zeros.assign(1, Poly(field(), nvars()));
  return zeros[0];
}

void DualElement::set_part(std::uint32_t mask, Poly p) {
  int i = shape_.index(mask);
  if (i < 0) {
    if (!p.is_zero()) throw Error(Error::Kind::domain, "nilpotent product outside the shape");
    return;
  }
  parts_[i] = std::move(p);
}

bool DualElement::is_zero() const {
  for (auto& p : parts_)
    if (!p.is_zero()) return false;
  return true;
}

DualElement DualElement::operator+(const DualElement& o) const {
  if (!(shape_ == o.shape_)) throw Error(Error::Kind::domain, "dual element shape mismatch");
  DualElement r = *this;
  for (std::size_t i = 0; i < parts_.size(); ++i) r.parts_[i] += o.parts_[i];
  return r;
}

DualElement DualElement::operator-() const {
  DualElement r = *this;
  for (auto& p : r.parts_) p = -p;
  return r;
}

DualElement DualElement::operator-(const DualElement& o) const { return *this + (-o); }

DualElement DualElement::operator*(const DualElement& o) const {
  if (!(shape_ == o.shape_)) throw Error(Error::Kind::domain, "dual element shape mismatch");
  DualElement r(shape_, field(), nvars());
  const auto& ms = shape_.masks();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (parts_[i].is_zero()) continue;
    for (std::size_t j = 0; j < ms.size(); ++j) {
      if (o.parts_[j].is_zero() || (ms[i] & ms[j])) continue;
      int k = shape_.index(ms[i] | ms[j]);
      if (k >= 0) r.parts_[k] += parts_[i] * o.parts_[j];
    }
  }
  return r;
}

DualElement DualElement::operator*(const Coeff& c) const {
  DualElement r = *this;
  for (auto& p : r.parts_) p = p * c;
  return r;
}

DualElement DualElement::operator*(const Poly& c) const {
  DualElement r = *this;
  for (auto& p : r.parts_) p = p * c;
  return r;
}

DualElement DualElement::widen(const NilShape& target) const {
  DualElement r(target, field(), nvars());
  const auto& ms = shape_.masks();
  for (std::size_t i = 0; i < ms.size(); ++i) r.set_part(ms[i], parts_[i]);
  return r;
}

std::string DualElement::to_string(const std::vector<std::string>& names,
                                   const std::vector<std::string>& param_names) const {
  std::string s;
  const auto& ms = shape_.masks();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (parts_[i].is_zero() && !(i == 0 && is_zero())) continue;
    std::string body = parts_[i].to_string(names);
    if (ms[i] == 0) {
      s = body;
      continue;
    }
    std::string prefix;
    for (unsigned j = 0; j < shape_.nparams(); ++j)
      if (ms[i] & (1u << j)) {
        if (!prefix.empty()) prefix += "*";
        prefix += j < param_names.size() ? param_names[j] : "eps" + std::to_string(j + 1);
      }
    if (!s.empty()) s += " + ";
    s += prefix + "*(" + body + ")";
  }
  return s.empty() ? "0" : s;
}

PresentedAlgebra::PresentedAlgebra(Field f, std::vector<std::string> gens, std::vector<DualElement> relations,
                                   NfStrategy strategy, unsigned irank)
    : field_(f), irank_(irank), gens_(std::move(gens)), relations_(std::move(relations)), strategy_(strategy) {
  setup_();
}

PresentedAlgebra::PresentedAlgebra(Field f, std::vector<std::string> gens, std::vector<Poly> relations,
                                   NfStrategy strategy)
    : field_(f), irank_(0), gens_(std::move(gens)), strategy_(strategy) {
  for (auto& r : relations) relations_.emplace_back(NilShape::dual(0), std::move(r));
  setup_();
}

PresentedAlgebra PresentedAlgebra::free(Field f, std::vector<std::string> gens, unsigned irank) {
  return PresentedAlgebra(f, std::move(gens), std::vector<DualElement>{}, NfStrategy::free_ring, irank);
}

void PresentedAlgebra::setup_() {
  const NilShape shape = NilShape::dual(irank_);
  for (auto& r : relations_) {
    if (!(r.shape() == shape) || r.nvars() != gens_.size() || r.field() != field_)
      throw Error(Error::Kind::config, "relation does not live in the free ring on the generators");
  }
  std::erase_if(relations_, [](const DualElement& r) { return r.is_zero(); });
  if (strategy_ == NfStrategy::free_ring) {
    if (!relations_.empty())
      throw Error(Error::Kind::config, "normal-form strategy 'free' given with nonempty relations");
    return;
  }
  bool rigid = std::all_of(relations_.begin(), relations_.end(), [](const DualElement& r) {
    for (std::size_t i = 1; i < r.shape().size(); ++i)
      if (!r.component(i).is_zero()) return false;
    return true;
  });
  if (rigid) {
    std::vector<Poly> bodies;
    for (auto& r : relations_) bodies.push_back(r.body());
    if (strategy_ == NfStrategy::groebner) {
      basis_ = buchberger(bodies);
    } else {
      for (auto& b : bodies) basis_.push_back(b.monic());
    }
    return;
  }
  // Infinitesimal relation parts: the bodies must already be a Groebner basis
  // so that division quotients lift to the k[I] relations.
  for (auto& r : relations_) {
    if (r.body().is_zero())
      throw Error(Error::Kind::config, "relation with zero body over k[I] is not supported");
    DualElement m = r * r.body().lead().coeff.inverse();
    basis_.push_back(m.body());
    lifts_.push_back(std::move(m));
  }
  if (!is_groebner(basis_))
    throw Error(Error::Kind::config, "relation bodies over k[I] must form a Groebner basis");
}

Poly PresentedAlgebra::normal_form(const Poly& p) const { return reduce(p, basis_); }

DualElement PresentedAlgebra::normal_form(const DualElement& e) const {
  DualElement r = e;
  if (lifts_.empty()) {
    for (std::size_t i = 0; i < r.shape().size(); ++i) r.component(i) = reduce(r.component(i), basis_);
    return r;
  }
  const auto& ms = r.shape().masks();
  std::vector<std::size_t> order(ms.size());
  for (std::size_t i = 0; i < ms.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return std::popcount(ms[a]) < std::popcount(ms[b]); });
  for (std::size_t idx : order) {
    Division d = divide(r.component(idx), basis_);
    r.component(idx) = d.remainder;
    for (unsigned j = 0; j < irank_; ++j) {
      std::uint32_t bit = 1u << j;
      if (ms[idx] & bit) continue;
      int target = r.shape().index(ms[idx] | bit);
      if (target < 0) continue;
      for (std::size_t i = 0; i < lifts_.size(); ++i)
        if (!d.quotients[i].is_zero()) r.component(target) -= d.quotients[i] * lifts_[i].part(bit);
    }
  }
  return r;
}

PresentedAlgebra PresentedAlgebra::special_fibre() const {
  std::vector<Poly> rels = basis_;
  return PresentedAlgebra(field_, gens_, rels, rels.empty() ? NfStrategy::free_ring : NfStrategy::rewrite);
}

PresentedAlgebra PresentedAlgebra::tensor_power(unsigned m) const {
  std::vector<std::string> names;
  for (unsigned c = 1; c <= m; ++c)
    for (auto& g : gens_) names.push_back(g + "_" + std::to_string(c));
  PresentedAlgebra acc = PresentedAlgebra::free(field_, {}, irank_);
  for (unsigned c = 0; c < m; ++c) acc = acc.tensor(*this, {});
  acc.gens_ = std::move(names);
  return acc;
}

// Relations in disjoint variables: the union of two Groebner bases is again
// one, so the result needs no completion.
PresentedAlgebra PresentedAlgebra::tensor(const PresentedAlgebra& o, std::vector<std::string> names) const {
  if (o.field_ != field_ || o.irank_ != irank_)
    throw Error(Error::Kind::domain, "tensor product over different bases");
  const std::size_t n = ngens(), total = n + o.ngens();
  if (names.empty()) names.resize(total);
  if (names.size() != total) throw Error(Error::Kind::domain, "tensor product name count mismatch");
  auto relations_of = [&](const PresentedAlgebra& a, std::size_t offset) {
    std::vector<DualElement> rels;
    if (a.lifts_.empty()) {
      for (auto& b : a.basis_) rels.emplace_back(NilShape::dual(irank_), b.shift(offset, total));
    } else {
      for (auto& l : a.lifts_) rels.push_back(l.map_parts([&](const Poly& p) { return p.shift(offset, total); }));
    }
    return rels;
  };
  std::vector<DualElement> rels = relations_of(*this, 0);
  for (auto& r : relations_of(o, n)) rels.push_back(std::move(r));
  NfStrategy s = rels.empty() ? NfStrategy::free_ring : NfStrategy::rewrite;
  return PresentedAlgebra(field_, std::move(names), std::move(rels), s, irank_);
}

DualElement lift(const Poly& p, const NilShape& shape) { return DualElement(shape, p); }

namespace {

class PowerCache {
 public:
  PowerCache(std::span<const DualElement> images, const PresentedAlgebra& target)
      : images_(images), target_(target), cache_(images.size()) {}

  const DualElement& get(std::size_t var, unsigned e) {
    auto& c = cache_[var];
    auto it = c.find(e);
    if (it != c.end()) return it->second;
    DualElement v = e == 1 ? target_.normal_form(images_[var])
                   : (e % 2 == 0) ? target_.normal_form(get(var, e / 2) * get(var, e / 2))
                                  : target_.normal_form(get(var, e - 1) * get(var, 1));
    return c.emplace(e, std::move(v)).first->second;
  }

 private:
  std::span<const DualElement> images_;
  const PresentedAlgebra& target_;
  std::vector<std::map<unsigned, DualElement>> cache_;
};

DualElement substitute_impl(const Poly& f, PowerCache& cache, const NilShape& shape,
                            const PresentedAlgebra& target) {
  const Field k = target.field();
  const std::size_t nv = target.ngens();
  DualElement sum(shape, k, nv);
  for (auto& t : f.terms()) {
    DualElement acc(shape, Poly::constant(k, nv, t.coeff));
    bool first = true;
    for (std::size_t v = 0; v < t.mono.size(); ++v) {
      if (!t.mono[v]) continue;
      const DualElement& pw = cache.get(v, t.mono[v]);
      if (first) {
        acc = pw * t.coeff;
        first = false;
      } else {
        acc = target.normal_form(acc * pw);
      }
    }
    sum += acc;
  }
  return target.normal_form(sum);
}

}  // namespace

DualElement substitute(const Poly& f, std::span<const DualElement> images, const PresentedAlgebra& target) {
  if (images.size() != f.nvars()) throw Error(Error::Kind::domain, "substitution arity mismatch");
  if (images.empty()) return DualElement(NilShape::dual(0), Poly::constant(target.field(), target.ngens(), f.constant_term()));
  PowerCache cache(images, target);
  return substitute_impl(f, cache, images[0].shape(), target);
}

DualElement substitute(const DualElement& f, std::span<const DualElement> images, const PresentedAlgebra& target) {
  if (images.size() != f.nvars()) throw Error(Error::Kind::domain, "substitution arity mismatch");
  if (images.empty()) {
    DualElement out(f.shape(), target.field(), target.ngens());
    for (auto m : f.shape().masks()) out.set_part(m, Poly::constant(target.field(), target.ngens(), f.part(m).constant_term()));
    return out;
  }
  const NilShape& shape = images[0].shape();
  PowerCache cache(images, target);
  DualElement sum(shape, target.field(), target.ngens());
  const auto& ms = f.shape().masks();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (f.component(i).is_zero()) continue;
    DualElement v = substitute_impl(f.component(i), cache, shape, target);
    if (ms[i] != 0) {
      DualElement mono(shape, target.field(), target.ngens());
      mono.set_part(ms[i], Poly::constant(target.field(), target.ngens(), 1));
      v = v * mono;
    }
    sum += v;
  }
  return target.normal_form(sum);
}

DualSplit dual_split(const DualMap& f, const PresentedAlgebra& source, const PresentedAlgebra& target) {
  if (f.gen_images.size() != source.ngens())
    throw Error(Error::Kind::domain, "one image per generator expected");
  if (f.gen_images.empty()) return {};
  const NilShape& shape = f.gen_images[0].shape();
  const unsigned r = shape.nparams();
  for (std::size_t j = 0; j < f.eps_images.size(); ++j) {
    DualElement want = DualElement::param(shape, target.field(), target.ngens(), static_cast<unsigned>(j));
    if (target.normal_form(f.eps_images[j]) != want)
      throw Error(Error::Kind::domain, "not a k[I]-algebra map: eps" + std::to_string(j + 1) + " is not fixed");
  }
  for (auto& rel : source.relations()) {
    if (!substitute(rel, f.gen_images, target).is_zero())
      throw Error(Error::Kind::domain, "not a k[I]-algebra map: a relation is not killed");
  }
  DualSplit s;
  s.parts.assign(r, {});
  for (auto& img : f.gen_images) {
    DualElement n = target.normal_form(img);
    s.bar.push_back(n.body());
    for (unsigned j = 0; j < r; ++j) s.parts[j].push_back(n.part(1u << j));
  }
  return s;
}

std::vector<DualElement> dual_join(const DualSplit& s, unsigned rank) {
  std::vector<DualElement> out;
  for (std::size_t g = 0; g < s.bar.size(); ++g) {
    DualElement e(NilShape::dual(rank), s.bar[g]);
    for (unsigned j = 0; j < rank; ++j) e.set_part(1u << j, s.parts[j][g]);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace wx
