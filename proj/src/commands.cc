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

#include "weilext/commands.hh"

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "weilext/catalog.hh"
#include "weilext/dieudonne.hh"
#include "weilext/group_algebra.hh"
#include "weilext/presentation.hh"

namespace wx {
namespace {

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned len = 0;
  if (!EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr))
    throw std::runtime_error("sha256 digest failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

std::string indent(const std::string& text) {
  std::string out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out += line.empty() ? "\n" : "  " + line + "\n";
  return out;
}

const char* yes(bool b) { return b ? "true" : "false"; }

// What a pipeline carries between steps.
struct State {
  enum class Kind { group_k, group_i, pair, deformation, restriction, classification };
  Kind kind;
  std::optional<HopfAlgebra> group;
  std::optional<std::vector<DualElement>> sigma;
  std::optional<Cocycle2> cocycle;
  std::optional<Deformation> deformation;
  std::optional<WeilExtension> restriction;
  std::string summary;  // classification text
};

std::string kind_name(State::Kind k) {
  switch (k) {
    case State::Kind::group_k: return "a group over k";
    case State::Kind::group_i: return "a group over k[I]";
    case State::Kind::pair: return "a group with a cocycle";
    case State::Kind::deformation: return "a rigidified deformation";
    case State::Kind::restriction: return "a restricted deformation";
    case State::Kind::classification: return "a Dieudonne classification";
  }
  return "?";
}

State from_presentation(Presentation p) {
  State s{State::Kind::group_k, p.group, std::move(p.rigidification), std::move(p.cocycle), {}, {}, {}};
  if (s.cocycle)
    s.kind = State::Kind::pair;
  else if (p.group.irank() > 0)
    s.kind = State::Kind::group_i;
  return s;
}

// A k[I] group with its given rigidification, or the identity one.
Deformation as_deformation(const State& s) {
  if (s.deformation) return *s.deformation;
  const HopfAlgebra& G = *s.group;
  auto sigma = s.sigma ? *s.sigma : identity_rigidification(G.special_fibre(), G.irank());
  return Deformation::rigidified(G, std::move(sigma));
}

State of_deformation(Deformation D) {
  State s{State::Kind::deformation, D.group(), D.rigidification(), {}, {}, {}, {}};
  s.deformation = std::move(D);
  return s;
}

State of_cocycle(Cocycle2 c) {
  State s{State::Kind::pair, c.group(), {}, {}, {}, {}, {}};
  s.cocycle = std::move(c);
  return s;
}

std::string state_text(const State& s) {
  switch (s.kind) {
    case State::Kind::group_k:
    case State::Kind::group_i:
    case State::Kind::deformation: return print_presentation({*s.group, std::nullopt, s.sigma});
    case State::Kind::pair: return print_presentation({*s.group, s.cocycle, std::nullopt});
    case State::Kind::restriction: return print_group(*s.group);
    case State::Kind::classification: return s.summary;
  }
  return {};
}

unsigned cocycle_degree(const Cocycle2& c) {
  unsigned d = 1;
  for (auto& p : c.coords()) d = std::max(d, p.total_degree());
  return d;
}

std::string classification_text(const DIExtension& x, unsigned m, unsigned fdeg, unsigned prec) {
  std::ostringstream out;
  auto row = [&](const char* name, const UnipotentModule& M) {
    out << name << ": " << M.module().to_string() << " (length " << M.module().length() << ")\n";
  };
  out << "witt length: " << m << "\nfrobenius window: " << fdeg << "\nprecision: p^" << prec << "\n";
  row("sub", x.sub);
  row("middle", x.middle);
  row("quotient", x.quotient);
  out << "composite zero: " << yes(x.composite_zero) << "\ninjective: " << yes(x.injective)
      << "\nsurjective: " << yes(x.surjective) << "\nlie dimensions: " << x.lie_dim_sub << " -> "
      << x.lie_dim_quotient << ", tangent rank " << x.tangent_rank << "\nsplit: " << yes(x.splitting.has_value())
      << "\n";
  for (auto* M : {&x.sub, &x.middle, &x.quotient})
    for (auto& w : M->warnings()) out << "warning: " << w << "\n";
  return out.str();
}

[[noreturn]] void mismatch(std::size_t i, const std::string& step, const State& s, const std::string& wants) {
  throw Error(Error::Kind::config, "step " + std::to_string(i) + " '" + step + "' expects " + wants + ", got " +
                                       kind_name(s.kind));
}

struct Pipeline {
  const CommandOptions& opts;
  std::vector<std::pair<std::string, bool>>& flags;
  std::vector<std::string>& inputs;

  State apply(std::size_t i, const std::string& step, State s) {
    const auto eq = step.find('=');
    const std::string op = step.substr(0, eq);
    const std::string arg = eq == std::string::npos ? "" : step.substr(eq + 1);
    using K = State::Kind;
    if (op != "scale" && op != "baer-sum" && eq != std::string::npos)
      throw Error(Error::Kind::config, "step " + std::to_string(i) + " '" + step + "' takes no argument");

    if (op == "weil-restrict") {
      if (s.kind != K::group_i && s.kind != K::deformation) mismatch(i, step, s, "a group over k[I]");
      if (!s.group->algebra().rigid_relations()) {
        // No rigidification exists; only the restricted group is available.
        State out{K::group_k, WeilRestriction(*s.group).result(), {}, {}, {}, {}, {}};
        return out;
      }
      WeilExtension W = extension_of(as_deformation(s));
      State out{K::restriction, W.restriction.result(), {}, {}, {}, {}, {}};
      out.restriction = std::move(W);
      return out;
    }
    if (op == "extract-cocycle") {
      if (s.kind == K::restriction) return of_cocycle(s.restriction->cocycle);
      if (s.kind != K::group_i && s.kind != K::deformation)
        mismatch(i, step, s, "a deformation or its restriction");
      return of_cocycle(extract_cocycle(as_deformation(s)));
    }
    if (op == "deform") {
      if (s.kind != K::pair) mismatch(i, step, s, "a group with a cocycle");
      return of_deformation(deform(*s.cocycle));
    }
    if (op == "weil-extend") {
      if (s.kind != K::pair) mismatch(i, step, s, "a group with a cocycle");
      Deformation D = weil_extend(build_extension(*s.cocycle));
      const unsigned deg = opts.cohom_deg ? opts.cohom_deg : 2 * cocycle_degree(*s.cocycle);
      flags.emplace_back("step " + std::to_string(i) + " restricts back",
                         cohomologous(*s.cocycle, extension_of(D).cocycle, deg).has_value());
      return of_deformation(std::move(D));
    }
    if (op == "scale") {
      if (arg.empty()) throw Error(Error::Kind::config, "step " + std::to_string(i) + " 'scale' needs scale=<lambda>");
      const Field f = s.group->field();
      Poly l = Poly::parse(arg, {}, f);
      const Coeff lambda = l.is_zero() ? Coeff::zero(f) : l.constant_term();
      if (s.kind == K::pair) return of_cocycle(scalar_mul(lambda, build_extension(*s.cocycle)).cocycle());
      if (s.kind == K::group_i || s.kind == K::deformation)
        return of_deformation(scale_deformation(lambda, as_deformation(s)));
      mismatch(i, step, s, "a cocycle or a deformation");
    }
    if (op == "baer-sum") {
      if (arg.empty())
        throw Error(Error::Kind::config, "step " + std::to_string(i) + " 'baer-sum' needs baer-sum=<file>");
      CommandInput other = read_command_input(arg);
      inputs.push_back(other.name + " sha256:" + sha256_hex(other.text));
      State t = from_presentation(parse_presentation(other.text, other.name));
      if (s.kind == K::pair && t.kind == K::pair)
        return of_cocycle(baer_sum(build_extension(*s.cocycle), build_extension(*t.cocycle)).cocycle());
      const auto deformable = [](const State& x) { return x.kind == K::group_i || x.kind == K::deformation; };
      if (deformable(s) && deformable(t))
        return of_deformation(sum_deformations(as_deformation(s), as_deformation(t)));
      if (s.kind != t.kind && (s.kind == K::pair || deformable(s)))
        throw Error(Error::Kind::config, "step " + std::to_string(i) + " '" + step + "': " + arg + " holds " +
                                             kind_name(t.kind) + ", the pipeline holds " + kind_name(s.kind));
      mismatch(i, step, s, "a cocycle or a deformation");
    }
    if (op == "classify") {
      if (s.kind != K::group_i && s.kind != K::deformation) mismatch(i, step, s, "a deformation");
      const unsigned prec = opts.prec ? opts.prec : opts.witt_len;
      if (prec < opts.witt_len)
        throw Error(Error::Kind::config, "precision p^" + std::to_string(prec) + " is below the Witt length");
      DIExtension x = classify(as_deformation(s), opts.witt_len, opts.fdeg);
      flags.emplace_back("step " + std::to_string(i) + " exact", x.exact);
      flags.emplace_back("step " + std::to_string(i) + " lie certified", x.lie_certified);
      State out{K::classification, {}, {}, {}, {}, {}, classification_text(x, opts.witt_len, opts.fdeg, prec)};
      return out;
    }
    throw Error(Error::Kind::config, "step " + std::to_string(i) + ": unknown step '" + step + "'");
  }
};

std::string render(const std::string& echo, const std::vector<std::string>& inputs, const std::string& body,
                   const std::vector<std::pair<std::string, bool>>& flags, bool passed) {
  std::ostringstream out;
  out << "command: " << echo << "\n";
  for (auto& in : inputs) out << "input: " << in << "\n";
  out << body << "flags:\n";
  for (auto& [name, value] : flags) out << "  " << name << ": " << yes(value) << "\n";
  out << "status: " << (passed ? "pass" : "fail") << "\n";
  return out.str();
}

}  // namespace

CommandInput read_command_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Error::Kind::config, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string stem = path.substr(path.find_last_of('/') + 1);
  stem = stem.substr(0, stem.find('.'));
  return {stem, ss.str()};
}

bool Report::passed() const {
  return std::all_of(flags.begin(), flags.end(), [](const auto& f) { return f.second; });
}

Report run_verify(const std::string& echo, const CommandInput& input, const CommandOptions& opts) {
  Presentation p = parse_presentation(input.text, input.name);
  const HopfAlgebra& G = p.group;
  Report r;
  HopfReport h = verify_hopf(G);
  r.flags = {{"relations preserved", h.relations_preserved},
             {"coassociative", h.coassociative},
             {"counital", h.counital},
             {"antipode", h.antipode}};
  if (G.smooth()) r.flags.emplace_back("smooth", *G.smooth());
  if (p.cocycle) r.flags.emplace_back("cocycle", check_cocycle(*p.cocycle));
  if (p.rigidification) {
    bool ok = true;
    try {
      Deformation::rigidified(G, *p.rigidification);
    } catch (const Error& e) {
      if (e.kind() != Error::Kind::domain) throw;
      ok = false;
    }
    r.flags.emplace_back("rigidification", ok);
  }
  if (opts.trunc && h.all()) {
    GroupAlgebra GA(G, opts.trunc);
    const Functional e = GA.counit();
    bool ok = true;
    for (std::size_t i = 0; i < GA.size() && ok; ++i) {
      const Functional d = GA.delta(i);
      ok = GA.convolve(e, d) == d && GA.convolve(d, e) == d;
    }
    r.flags.emplace_back("convolution unit", ok);
  }
  const std::string body = "result:\n" + indent(print_presentation(p));
  r.text = render(echo, {input.name + " sha256:" + sha256_hex(input.text)}, body, r.flags, r.passed());
  return r;
}

Report run_pipeline(const std::string& echo, const CommandInput& input, const std::vector<std::string>& steps,
                    const CommandOptions& opts) {
  if (steps.empty()) throw Error(Error::Kind::config, "the pipeline has no steps");
  if (opts.witt_len == 0 || opts.fdeg == 0) throw Error(Error::Kind::config, "--witt-len and --fdeg must be positive");
  Report r;
  std::vector<std::string> inputs{input.name + " sha256:" + sha256_hex(input.text)};
  Pipeline run{opts, r.flags, inputs};
  State s = from_presentation(parse_presentation(input.text, input.name));
  std::string body;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const std::size_t n = i + 1;
    if (s.kind == State::Kind::classification)
      throw Error(Error::Kind::config, "step " + std::to_string(n) + " '" + steps[i] + "' follows classify");
    try {
      s = run.apply(n, steps[i], std::move(s));
    } catch (const Error& e) {
      const std::string where = "step " + std::to_string(n);
      if (std::string(e.what()).rfind(where, 0) == 0) throw;
      throw Error(e.kind(), where + " '" + steps[i] + "': " + e.what());
    }
    body += "step " + std::to_string(n) + ": " + steps[i] + " -> " + kind_name(s.kind) + "\n" + indent(state_text(s));
  }
  r.text = render(echo, inputs, body, r.flags, r.passed());
  return r;
}

std::string catalog_text(const std::string& name, unsigned p) {
  const Field f = p ? Field::prime(p) : Field::rationals();
  const HopfAlgebra G = catalog::by_name(name, f);
  // Reparsing stores the structure maps in normal form.
  return print_group(parse_presentation(print_group(G), G.name()).group);
}

}  // namespace wx
