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

#include "weilext/poly.hh"

#include <algorithm>
#include <cctype>
#include <unordered_map>

namespace wx {

int grevlex_cmp(const Mono& a, const Mono& b) {
  unsigned da = mono_degree(a), db = mono_degree(b);
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

unsigned mono_degree(const Mono& m) {
  unsigned d = 0;
  for (auto e : m) d += e;
  return d;
}

bool mono_divides(const Mono& a, const Mono& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Mono mono_mul(const Mono& a, const Mono& b) {
  Mono r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Mono mono_div(const Mono& a, const Mono& b) {
  Mono r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Mono mono_lcm(const Mono& a, const Mono& b) {
  Mono r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

std::size_t MonoHash::operator()(const Mono& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto e : m) h = (h ^ e) * 1099511628211ull;
  return h;
}

Poly Poly::constant(Field f, std::size_t nvars, const Coeff& c) {
  Poly r(f, nvars);
  if (!c.is_zero()) r.terms_.push_back({Mono(nvars, 0), c});
  return r;
}

Poly Poly::variable(Field f, std::size_t nvars, std::size_t i) {
  Mono m(nvars, 0);
  m.at(i) = 1;
  return monomial(f, std::move(m), Coeff::one(f));
}

Poly Poly::monomial(Field f, Mono m, const Coeff& c) {
  Poly r(f, m.size());
  if (!c.is_zero()) r.terms_.push_back({std::move(m), c});
  return r;
}

Poly Poly::from_terms(Field f, std::size_t nvars, std::vector<Term> terms) {
  Poly r(f, nvars);
  r.terms_ = std::move(terms);
  r.canonicalize_();
  return r;
}

void Poly::canonicalize_() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return grevlex_cmp(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono)
      out.back().coeff += t.coeff;
    else
      out.push_back(std::move(t));
  }
  std::erase_if(out, [](const Term& t) { return t.coeff.is_zero(); });
  terms_ = std::move(out);
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && mono_degree(terms_[0].mono) == 0);
}

Coeff Poly::constant_term() const { return coefficient(Mono(nvars_, 0)); }

Coeff Poly::coefficient(const Mono& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Mono& x) { return grevlex_cmp(t.mono, x) > 0; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return Coeff::zero(field_);
}

unsigned Poly::total_degree() const {
  unsigned d = 0;
  for (auto& t : terms_) d = std::max(d, mono_degree(t.mono));
  return d;
}

unsigned Poly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (auto& t : terms_) d = std::max(d, t.mono[var]);
  return d;
}

Poly Poly::operator+(const Poly& o) const {
  if (o.nvars_ != nvars_) throw Error(Error::Kind::domain, "polynomial arity mismatch");
  Poly r(field_, nvars_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = grevlex_cmp(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Coeff s = terms_[i].coeff + o.terms_[j].coeff;
      if (!s.is_zero()) r.terms_.push_back({terms_[i].mono, s});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Coeff& c) const {
  if (c.is_zero()) return Poly(field_, nvars_);
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Poly Poly::mul_term(const Mono& m, const Coeff& c) const {
  if (c.is_zero()) return Poly(field_, nvars_);
  Poly r(field_, nvars_);
  r.terms_.reserve(terms_.size());
  for (auto& t : terms_) r.terms_.push_back({mono_mul(t.mono, m), t.coeff * c});
  return r;  // grevlex is a monomial order, so the order is preserved
}

Poly Poly::operator*(const Poly& o) const {
  if (o.nvars_ != nvars_) throw Error(Error::Kind::domain, "polynomial arity mismatch");
  if (is_zero() || o.is_zero()) return Poly(field_, nvars_);
  if (terms_.size() == 1) return o.mul_term(terms_[0].mono, terms_[0].coeff);
  if (o.terms_.size() == 1) return mul_term(o.terms_[0].mono, o.terms_[0].coeff);
  std::unordered_map<Mono, Coeff, MonoHash> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (auto& a : terms_)
    for (auto& b : o.terms_) {
      Mono m = mono_mul(a.mono, b.mono);
      auto it = acc.find(m);
      if (it == acc.end())
        acc.emplace(std::move(m), a.coeff * b.coeff);
      else
        it->second += a.coeff * b.coeff;
    }
  Poly r(field_, nvars_);
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) r.terms_.push_back({m, c});
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const Term& a, const Term& b) { return grevlex_cmp(a.mono, b.mono) > 0; });
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly r = constant(field_, nvars_, 1), b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * lead().coeff.inverse();
}

bool Poly::operator==(const Poly& o) const {
  if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff) return false;
  return true;
}

Poly Poly::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (auto& t : terms_) {
    if (t.mono[var] == 0) continue;
    Term d{t.mono, t.coeff * Coeff::from_int(field_, t.mono[var])};
    d.mono[var] -= 1;
    if (!d.coeff.is_zero()) out.push_back(std::move(d));
  }
  return from_terms(field_, nvars_, std::move(out));
}

Coeff Poly::evaluate(std::span<const Coeff> point) const {
  if (point.size() != nvars_) throw Error(Error::Kind::domain, "evaluation point has wrong arity");
  Coeff s = Coeff::zero(field_);
  for (auto& t : terms_) {
    Coeff v = t.coeff;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (t.mono[i]) v *= point[i].pow(t.mono[i]);
    s += v;
  }
  return s;
}

Poly Poly::remap(std::span<const std::size_t> map, std::size_t new_nvars) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    Mono m(new_nvars, 0);
    for (std::size_t i = 0; i < nvars_; ++i) m.at(map[i]) += t.mono[i];
    out.push_back({std::move(m), t.coeff});
  }
  return from_terms(field_, new_nvars, std::move(out));
}

Poly Poly::shift(std::size_t offset, std::size_t new_nvars) const {
  std::vector<std::size_t> map(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) map[i] = offset + i;
  return remap(map, new_nvars);
}

Poly Poly::change_field(Field target) const {
  std::vector<Term> out;
  for (auto& t : terms_) out.push_back({t.mono, Coeff::from_mpq(target, t.coeff.to_mpq())});
  return from_terms(target, nvars_, std::move(out));
}

Poly Poly::compose(std::span<const Poly> images) const {
  if (images.size() != nvars_) throw Error(Error::Kind::domain, "composition arity mismatch");
  if (images.empty()) return *this;
  const Field f = images[0].field();
  const std::size_t nv = images[0].nvars();
  std::vector<std::vector<Poly>> powers(nvars_);
  auto power = [&](std::size_t v, unsigned e) -> const Poly& {
    auto& pw = powers[v];
    if (pw.empty()) pw.push_back(constant(f, nv, 1));
    while (pw.size() <= e) pw.push_back(pw.back() * images[v]);
    return pw[e];
  };
  Poly sum(f, nv);
  for (auto& t : terms_) {
    Poly acc = constant(f, nv, t.coeff);
    for (std::size_t v = 0; v < nvars_; ++v)
      if (t.mono[v]) acc *= power(v, t.mono[v]);
    sum += acc;
  }
  return sum;
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto& t : terms_) {
    std::string c = t.coeff.repr();
    bool neg = !c.empty() && c[0] == '-';
    if (neg) c = c.substr(1);
    if (first)
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    first = false;
    std::string m;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (!t.mono[i]) continue;
      if (!m.empty()) m += "*";
      m += names.at(i);
      if (t.mono[i] > 1) m += "^" + std::to_string(t.mono[i]);
    }
    if (m.empty())
      s += c;
    else if (c == "1")
      s += m;
    else
      s += c + "*" + m;
  }
  return s;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const std::vector<std::string>& names, Field f)
      : s_(text), names_(names), f_(f) {}

  Poly run() {
    Poly p = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw Error(Error::Kind::parse, "polynomial '" + std::string(s_) + "': " + msg);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  Poly expr() {
    Poly acc(f_, names_.size());
    bool neg = eat('-');
    if (!neg) eat('+');
    Poly t = term();
    acc = neg ? -t : t;
    for (;;) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        return acc;
    }
  }
  Poly term() {
    Poly acc = factor();
    for (;;) {
      if (eat('*')) {
        acc *= factor();
      } else if (eat('/')) {
        Poly d = factor();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc = acc * d.constant_term().inverse();
      } else {
        return acc;
      }
    }
  }
  Poly factor() {
    Poly b = atom();
    if (eat('^')) {
      skip();
      std::size_t st = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (st == i_) fail("exponent expected");
      b = b.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(st, i_ - st)))));
    }
    return b;
  }
  Poly atom() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end");
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      Poly p = expr();
      if (!eat(')')) fail("')' expected");
      return p;
    }
    if (c == '-') {
      ++i_;
      return -atom();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t st = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      mpz_class v(std::string(s_.substr(st, i_ - st)));
      return Poly::constant(f_, names_.size(), Coeff::from_mpz(f_, v));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t st = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_' || s_[i_] == '.'))
        ++i_;
      std::string name(s_.substr(st, i_ - st));
      for (std::size_t k = 0; k < names_.size(); ++k)
        if (names_[k] == name) return Poly::variable(f_, names_.size(), k);
      fail("unknown variable '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  const std::vector<std::string>& names_;
  Field f_;
  std::size_t i_ = 0;
};

}  // namespace

Poly Poly::parse(std::string_view text, const std::vector<std::string>& names, Field f) {
  return PolyParser(text, names, f).run();
}

}  // namespace wx
