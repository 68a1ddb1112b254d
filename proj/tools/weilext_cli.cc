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

// Command-line front end over the C API. Reports go to stdout or --out;
// timing and errors go to stderr so reports stay byte-identical.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "weilext/weilext.h"

namespace {

// 0 success, 2 a verification flag failed, 3 unreadable input text,
// 4 a window or degree bound was too small, 1 anything else.
int exit_code(wx_status s) {
  switch (s) {
    case WX_OK: return 0;
    case WX_ERR_PARSE: return 3;
    case WX_ERR_BOUNDS: return 4;
    default: return 1;
  }
}

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << std::flush;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weil restriction and deformations of affine group schemes"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  wx_options opts{4, 2, 3, 0, 0};
  std::string out_path;
  app.add_option("--trunc", opts.trunc, "Group-algebra truncation degree for the convolution check")->check(CLI::PositiveNumber);
  app.add_option("--witt-len", opts.witt_len, "Witt length for classify")->check(CLI::PositiveNumber);
  app.add_option("--fdeg", opts.fdeg, "Frobenius window for classify")->check(CLI::PositiveNumber);
  app.add_option("--prec", opts.prec, "Coefficient precision N of Z/p^N; at least the Witt length");
  app.add_option("--cohom-deg", opts.cohom_deg, "Degree bound for coboundary searches");
  app.add_option("--out", out_path, "Write the report here instead of stdout");

  std::string file, arg;
  std::vector<std::string> steps;
  unsigned p = 0;

  auto* verify = app.add_subcommand("verify", "Check the Hopf axioms and any cocycle or rigidification");
  verify->add_option("file", file)->required();

  auto* pipeline = app.add_subcommand("pipeline", "Run steps in order");
  pipeline->add_option("file", file)->required();
  pipeline->add_option("steps", steps,
                       "weil-restrict, deform, extract-cocycle, weil-extend, classify, scale=<l>, baer-sum=<file>")
      ->required();

  std::vector<CLI::App*> single;
  for (const char* name : {"weil-restrict", "deform", "extract-cocycle", "weil-extend", "classify"}) {
    auto* s = app.add_subcommand(name, std::string("Pipeline with the single step ") + name);
    s->add_option("file", file)->required();
    single.push_back(s);
  }
  auto* scale = app.add_subcommand("scale", "Scale a cocycle or deformation by lambda");
  scale->add_option("file", file)->required();
  scale->add_option("lambda", arg)->required();
  auto* baer = app.add_subcommand("baer-sum", "Sum of two cocycles or deformations");
  baer->add_option("file", file)->required();
  baer->add_option("other", arg)->required();

  auto* catalog = app.add_subcommand("catalog", "Print a catalog group");
  catalog->add_option("name", arg, "Catalog name, or 'list'")->required();
  catalog->add_option("-p,--characteristic", p, "0 for the rationals");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (catalog->parsed()) {
    char* text = nullptr;
    wx_status s = arg == "list" ? wx_catalog_names(&text) : wx_catalog_print(arg.c_str(), p, &text);
    if (s != WX_OK) {
      std::cerr << "error: " << wx_last_error() << "\n";
      return exit_code(s);
    }
    std::string t = text;
    wx_string_free(text);
    if (arg == "list") t += "\n";
    return emit(t, out_path);
  }

  // Echo the invocation without the program path so reports do not depend on it.
  std::string echo = "weilext";
  for (int i = 1; i < argc; ++i) echo += std::string(" ") + argv[i];

  for (auto* s : single)
    if (s->parsed()) steps = {s->get_name()};
  if (scale->parsed()) steps = {"scale=" + arg};
  if (baer->parsed()) steps = {"baer-sum=" + arg};

  const auto start = std::chrono::steady_clock::now();
  wx_report* report = nullptr;
  wx_status s;
  if (verify->parsed()) {
    s = wx_verify(echo.c_str(), file.c_str(), &opts, &report);
  } else {
    std::vector<const char*> cs;
    for (auto& st : steps) cs.push_back(st.c_str());
    s = wx_pipeline(echo.c_str(), file.c_str(), cs.data(), cs.size(), &opts, &report);
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::fprintf(stderr, "time: %.3f s\n", secs);
  if (s != WX_OK) {
    std::cerr << "error: " << wx_last_error() << "\n";
    return exit_code(s);
  }
  const bool passed = wx_report_passed(report);
  int rc = emit(wx_report_text(report), out_path);
  wx_report_free(report);
  if (rc) return rc;
  return passed ? 0 : 2;
}
