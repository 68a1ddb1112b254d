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

#include "weilext/presentation.hh"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>

namespace wx {
namespace {

constexpr std::array<std::string_view, 8> kSections = {"BASE",    "GENERATORS", "RELATIONS", "COMUL",
                                                       "COUNIT",  "ANTIPODE",   "COCYCLE",   "RIGIDIFICATION"};

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw Error(Error::Kind::parse, "line " + std::to_string(line) + ": " + msg);
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

struct Line {
  std::size_t number;
  std::string text;
};

std::map<std::string, std::vector<Line>> split_sections(std::string_view text) {
  static const std::regex header("[A-Z][A-Z_]+");
  std::map<std::string, std::vector<Line>> out;
  std::vector<Line>* current = nullptr;
  std::size_t number = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::string t = trim(raw);
    if (t.empty()) continue;
    if (std::regex_match(t, header)) {
      if (std::find(kSections.begin(), kSections.end(), t) == kSections.end()) fail(number, "unknown section " + t);
      if (out.count(t)) fail(number, "section " + t + " repeated");
      current = &out[t];
      continue;
    }
    if (!current) fail(number, "text before the first section");
    current->push_back({number, std::move(t)});
  }
  return out;
}

const std::vector<Line>& section(const std::map<std::string, std::vector<Line>>& s, const std::string& name) {
  static const std::vector<Line> empty;
  auto it = s.find(name);
  if (it == s.end()) {
    if (name == "RELATIONS") return empty;
    throw Error(Error::Kind::parse, "missing section " + name);
  }
  return it->second;
}

std::vector<std::string> eps_names(unsigned r) {
  std::vector<std::string> v;
  for (unsigned j = 0; j < r; ++j) v.push_back("eps" + std::to_string(j + 1));
  return v;
}

// A polynomial in names and eps1..epsr read in k[I][names]: eps_i eps_j = 0.
DualElement parse_dual(const std::string& text, const std::vector<std::string>& names, Field f, unsigned r,
                       std::size_t line) {
  std::vector<std::string> all = names;
  for (auto& e : eps_names(r)) all.push_back(e);
  Poly p(f, all.size());
  try {
    p = Poly::parse(text, all, f);
  } catch (const Error& e) {
    fail(line, e.what());
  }
  const NilShape shape = NilShape::dual(r);
  const std::size_t n = names.size();
  std::vector<std::vector<Term>> parts(shape.size());
  for (const Term& t : p.terms()) {
    std::uint32_t mask = 0;
    bool vanishes = false;
    for (unsigned j = 0; j < r; ++j) {
      if (t.mono[n + j] > 1) vanishes = true;
      if (t.mono[n + j]) mask |= 1u << j;
    }
    int idx = shape.index(mask);
    if (vanishes || idx < 0) continue;
    parts[idx].push_back({Mono(t.mono.begin(), t.mono.begin() + n), t.coeff});
  }
  DualElement out(shape, f, n);
  for (std::size_t i = 0; i < parts.size(); ++i) out.component(i) = Poly::from_terms(f, n, std::move(parts[i]));
  return out;
}

struct Assignment {
  std::size_t line;
  std::string lhs, rhs;
};

Assignment split_assignment(const Line& l) {
  auto eq = l.text.find('=');
  if (eq == std::string::npos) fail(l.number, "expected '<generator> = <value>'");
  return {l.number, trim(std::string_view(l.text).substr(0, eq)), trim(std::string_view(l.text).substr(eq + 1))};
}

// One right-hand side per generator, in generator order.
std::vector<Assignment> per_generator(const std::vector<Line>& lines, const std::vector<std::string>& gens,
                                      const std::string& what) {
  std::vector<std::optional<Assignment>> slot(gens.size());
  for (auto& l : lines) {
    Assignment a = split_assignment(l);
    auto it = std::find(gens.begin(), gens.end(), a.lhs);
    if (it == gens.end()) fail(l.number, what + ": unknown generator '" + a.lhs + "'");
    auto& s = slot[it - gens.begin()];
    if (s) fail(l.number, what + ": generator '" + a.lhs + "' given twice");
    s = std::move(a);
  }
  std::vector<Assignment> out;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (!slot[g]) throw Error(Error::Kind::parse, what + ": no value for generator '" + gens[g] + "'");
    out.push_back(std::move(*slot[g]));
  }
  return out;
}

struct Base {
  Field field = Field::rationals();
  unsigned rank = 0;
};

Base parse_base(const std::vector<Line>& lines) {
  static const std::regex fp(R"(Fp\s+(\d+))"), q("Q"), irank(R"(I\s+rank\s+(\d+))");
  Base b;
  bool have_field = false, have_rank = false;
  for (auto& l : lines) {
    std::smatch m;
    if (std::regex_match(l.text, m, fp)) {
      if (have_field) fail(l.number, "field given twice");
      if (m[1].length() > 10) fail(l.number, "characteristic too large");
      try {
        b.field = Field::prime(std::stoull(m[1]));
      } catch (const Error& e) {
        fail(l.number, e.what());
      }
      have_field = true;
    } else if (std::regex_match(l.text, q)) {
      if (have_field) fail(l.number, "field given twice");
      have_field = true;
    } else if (std::regex_match(l.text, m, irank)) {
      if (have_rank) fail(l.number, "rank given twice");
      if (m[1].length() > 2 || std::stoul(m[1]) > 16) fail(l.number, "rank of I above 16");
      b.rank = static_cast<unsigned>(std::stoul(m[1]));
      have_rank = true;
    } else {
      fail(l.number, "expected 'Fp <p>', 'Q' or 'I rank <r>'");
    }
  }
  if (!have_field) throw Error(Error::Kind::parse, "BASE names no field");
  return b;
}

std::vector<std::string> parse_generators(const std::vector<Line>& lines) {
  static const std::regex ident("[A-Za-z][A-Za-z0-9_]*"), eps("eps[0-9]+");
  std::vector<std::string> gens;
  for (auto& l : lines) {
    std::string t = l.text;
    std::replace(t.begin(), t.end(), ',', ' ');
    std::istringstream in(t);
    for (std::string g; in >> g;) {
      if (!std::regex_match(g, ident)) fail(l.number, "bad generator name '" + g + "'");
      if (std::regex_match(g, eps)) fail(l.number, "'" + g + "' is reserved for the basis of I");
      if (std::find(gens.begin(), gens.end(), g) != gens.end()) fail(l.number, "generator '" + g + "' repeated");
      gens.push_back(g);
    }
  }
  if (gens.empty()) throw Error(Error::Kind::parse, "GENERATORS is empty");
  return gens;
}

std::string field_line(Field f) { return f.is_rational() ? "Q" : "Fp " + std::to_string(f.characteristic()); }

void print_section(std::ostringstream& out, const std::string& title, const std::vector<std::string>& gens,
                   const std::vector<DualElement>& values, const std::vector<std::string>& names) {
  out << "\n" << title << "\n";
  for (std::size_t g = 0; g < gens.size(); ++g) out << gens[g] << " = " << values[g].to_string(names) << "\n";
}

}  // namespace

Presentation parse_presentation(std::string_view text, std::string name) {
  const auto sections = split_sections(text);
  const Base base = parse_base(section(sections, "BASE"));
  const Field f = base.field;
  const bool has_cocycle = sections.count("COCYCLE") > 0;
  const unsigned group_rank = has_cocycle ? 0 : base.rank;
  if (has_cocycle && base.rank == 0) throw Error(Error::Kind::parse, "COCYCLE needs 'I rank <r>' with r >= 1");
  if (sections.count("RIGIDIFICATION") && group_rank == 0)
    throw Error(Error::Kind::parse, "RIGIDIFICATION needs a group over k[I] and no COCYCLE");

  const std::vector<std::string> gens = parse_generators(section(sections, "GENERATORS"));
  std::vector<DualElement> rels;
  for (auto& l : section(sections, "RELATIONS")) {
    std::string t = l.text;
    if (auto eq = t.find('='); eq != std::string::npos) t = "(" + t.substr(0, eq) + ") - (" + t.substr(eq + 1) + ")";
    DualElement r = parse_dual(t, gens, f, group_rank, l.number);
    if (!r.is_zero()) rels.push_back(std::move(r));
  }
  PresentedAlgebra A(f, gens, rels, rels.empty() ? NfStrategy::free_ring : NfStrategy::groebner, group_rank);
  const std::vector<std::string> sq = PresentedAlgebra::free(f, gens).tensor_power(2).gens();

  std::vector<DualElement> comul, counit, antipode;
  for (auto& a : per_generator(section(sections, "COMUL"), gens, "COMUL"))
    comul.push_back(parse_dual(a.rhs, sq, f, group_rank, a.line));
  for (auto& a : per_generator(section(sections, "COUNIT"), gens, "COUNIT"))
    counit.push_back(parse_dual(a.rhs, {}, f, group_rank, a.line));
  for (auto& a : per_generator(section(sections, "ANTIPODE"), gens, "ANTIPODE"))
    antipode.push_back(A.normal_form(parse_dual(a.rhs, gens, f, group_rank, a.line)));
  const PresentedAlgebra S = A.tensor_power(2);
  for (auto& c : comul) c = S.normal_form(c);
  HopfAlgebra G(std::move(name), std::move(A), std::move(comul), std::move(counit), std::move(antipode));

  Presentation p{G, std::nullopt, std::nullopt};
  if (has_cocycle) {
    const unsigned r = base.rank;
    std::vector<std::vector<Poly>> vals(r, std::vector<Poly>(gens.size(), Poly(f, sq.size())));
    const auto lines = per_generator(section(sections, "COCYCLE"), gens, "COCYCLE");
    for (std::size_t g = 0; g < gens.size(); ++g) {
      DualElement v = parse_dual(lines[g].rhs, sq, f, r, lines[g].line);
      if (!v.body().is_zero()) fail(lines[g].line, "cocycle values lie in I: every term needs an eps factor");
      for (unsigned j = 0; j < r; ++j) vals[j][g] = v.part(1u << j);
    }
    LieModule lie(G, r);
    p.cocycle = Cocycle2(G, r, lie.coordinates(vals, G.square()));
  }
  if (sections.count("RIGIDIFICATION")) {
    std::vector<DualElement> sigma;
    for (auto& a : per_generator(sections.at("RIGIDIFICATION"), gens, "RIGIDIFICATION"))
      sigma.push_back(parse_dual(a.rhs, gens, f, group_rank, a.line));
    p.rigidification = std::move(sigma);
  }
  return p;
}

Presentation load_presentation(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Error::Kind::config, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str(), path.stem().string());
}

std::string print_presentation(const Presentation& p) {
  const HopfAlgebra& G = p.group;
  const auto& gens = G.gens();
  const unsigned r = p.cocycle ? p.cocycle->rank() : G.irank();
  const auto eps = eps_names(r);
  std::ostringstream out;
  out << "# " << G.name() << "\nBASE\n" << field_line(G.field()) << "\n";
  if (r) out << "I rank " << r << "\n";
  out << "\nGENERATORS\n";
  for (std::size_t g = 0; g < gens.size(); ++g) out << (g ? " " : "") << gens[g];
  out << "\n";
  if (!G.algebra().relations().empty()) {
    out << "\nRELATIONS\n";
    for (auto& rel : G.algebra().relations()) out << rel.to_string(gens, eps) << "\n";
  }
  // Normal forms, so that printing a parsed group reproduces the text.
  std::vector<DualElement> comul, antipode;
  for (auto& e : G.comul()) comul.push_back(G.square().normal_form(e));
  for (auto& e : G.antipode()) antipode.push_back(G.algebra().normal_form(e));
  print_section(out, "COMUL", gens, comul, G.square().gens());
  print_section(out, "COUNIT", gens, G.counit(), {});
  print_section(out, "ANTIPODE", gens, antipode, gens);
  if (p.cocycle) {
    const auto vals = p.cocycle->values();
    const NilShape shape = NilShape::dual(r);
    std::vector<DualElement> per_gen;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      DualElement v(shape, G.field(), G.square().ngens());
      for (unsigned j = 0; j < r; ++j) v.set_part(1u << j, G.square().normal_form(vals[j][g]));
      per_gen.push_back(std::move(v));
    }
    print_section(out, "COCYCLE", gens, per_gen, G.square().gens());
  }
  if (p.rigidification) print_section(out, "RIGIDIFICATION", gens, *p.rigidification, gens);
  return out.str();
}

std::string print_group(const HopfAlgebra& G) { return print_presentation({G, std::nullopt, std::nullopt}); }

}  // namespace wx
